//! Command line interface for the reflexive-polytope mirror pipeline.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use polymirror_cli::batch::{batch_compute, classify, BatchOptions};
use polymirror_cli::error::CliError;
use polymirror_cli::parse::{parse_vertex_file, write_vertex_block};
use polymirror_cli::report;
use polymirror_cli::table::{emit_table, TableFormat, TableKind};
use polymirror_core::{normal_form, LatticePolytope};

#[derive(Parser)]
#[command(
    name = "polymirror",
    about = "Exact invariants of reflexive 3-polytopes and the Hodge-level mirror checks \
             of the Calabi-Yau threefolds obtained from them by smoothing",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Record bad blocks (e.g. non-reflexive input) and continue instead of
    /// aborting.
    #[arg(long, global = true)]
    lenient: bool,

    /// Worker thread count for batch computation; defaults to the available
    /// parallelism.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Write output to a file instead of stdout.
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Reflexivity and the full identity report for every block.
    Check { file: PathBuf },
    /// Emit the polar dual of every block, in the same vertex format.
    Dual { file: PathBuf },
    /// f-vectors, per-face point counts and volumes.
    Stats { file: PathBuf },
    /// Hodge pairs of the double and mixed smoothings per polytope.
    Hodge { file: PathBuf },
    /// Mirror-relation reports (Hodge swaps and rank predicates).
    Mirror { file: PathBuf },
    /// Group blocks by normal form; count classes and self-dual classes.
    Classify { file: PathBuf },
    /// Emit a result table.
    Table {
        file: PathBuf,
        /// 1 = double-smoothing mirror data, 2 = mixed-smoothing data.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// The lambda-invariant derivation for the projective-space example.
    Lambda,
    /// Canonical vertex matrices of every block.
    NormalForm { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let jobs = jobs.max(1);
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("polymirror: could not configure {jobs} workers: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(output) => {
            let result = match &cli.output {
                Some(path) => fs::write(path, output).map_err(CliError::from),
                None => {
                    print!("{output}");
                    Ok(())
                }
            };
            match result {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("polymirror: {e}");
                    ExitCode::from(e.exit_code())
                }
            }
        }
        Err(e) => {
            eprintln!("polymirror: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load(file: &PathBuf) -> Result<Vec<LatticePolytope>, CliError> {
    let text = fs::read_to_string(file)?;
    parse_vertex_file(&text)
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let options = BatchOptions {
        lenient: cli.lenient,
    };
    let mut out = String::new();
    match &cli.command {
        Command::Check { file } => {
            let polys = load(file)?;
            let mut reflexive = 0usize;
            for (i, p) in polys.iter().enumerate() {
                if report::check_block(&mut out, i + 1, p)? {
                    reflexive += 1;
                } else if !cli.lenient {
                    return Err(CliError::NotReflexive { block: i + 1 });
                }
            }
            writeln!(
                out,
                "{} blocks, {} reflexive, all identities hold",
                polys.len(),
                reflexive
            )
            .unwrap();
        }
        Command::Dual { file } => {
            let polys = load(file)?;
            for (i, p) in polys.iter().enumerate() {
                let id = i + 1;
                if !p.is_reflexive() {
                    if cli.lenient {
                        writeln!(out, "# block {id}: not reflexive, skipped\n").unwrap();
                        continue;
                    }
                    return Err(CliError::NotReflexive { block: id });
                }
                let dual = p.polar_dual().expect("reflexive polytope has a dual");
                write_vertex_block(&mut out, &dual, &format!("dual of block {id}"));
                out.push('\n');
            }
        }
        Command::Stats { file } => {
            let polys = load(file)?;
            for (i, p) in polys.iter().enumerate() {
                report::stats_block(&mut out, i + 1, p);
            }
        }
        Command::Hodge { file } => {
            let entries = batch_compute(&load(file)?, options)?;
            for e in &entries {
                report::hodge_block(&mut out, e);
            }
        }
        Command::Mirror { file } => {
            let polys = load(file)?;
            for (i, p) in polys.iter().enumerate() {
                let id = i + 1;
                if !p.is_reflexive() {
                    if cli.lenient {
                        writeln!(out, "block {id}: not reflexive, skipped").unwrap();
                        continue;
                    }
                    return Err(CliError::NotReflexive { block: id });
                }
                report::mirror_block(&mut out, id, p)?;
            }
        }
        Command::Classify { file } => {
            let entries = batch_compute(&load(file)?, options)?;
            let c = classify(&entries);
            writeln!(
                out,
                "{} inputs, {} classes, {} duplicate inputs, {} self-dual classes",
                entries.len(),
                c.num_classes,
                c.duplicate_inputs,
                c.self_dual_classes
            )
            .unwrap();
            for (i, class) in c.classes.iter().enumerate() {
                let dual_note = if class.self_dual {
                    "self-dual".to_string()
                } else if class.dual_member_ids.is_empty() {
                    "dual class not among inputs".to_string()
                } else {
                    format!("dual class holds ids {:?}", class.dual_member_ids)
                };
                writeln!(
                    out,
                    "class {}: ids {:?}, {}",
                    i + 1,
                    class.member_ids,
                    dual_note
                )
                .unwrap();
            }
        }
        Command::Table {
            file,
            which,
            format,
        } => {
            let entries = batch_compute(&load(file)?, options)?;
            let kind = match which {
                1 => TableKind::Double,
                _ => TableKind::Mixed,
            };
            let fmt = match format {
                FormatArg::Csv => TableFormat::Csv,
                FormatArg::Json => TableFormat::Json,
            };
            out = emit_table(&entries, kind, fmt);
        }
        Command::Lambda => {
            out = report::lambda_report();
        }
        Command::NormalForm { file } => {
            let polys = load(file)?;
            for (i, p) in polys.iter().enumerate() {
                let id = i + 1;
                if !p.is_reflexive() {
                    if cli.lenient {
                        writeln!(out, "# block {id}: not reflexive, skipped\n").unwrap();
                        continue;
                    }
                    return Err(CliError::NotReflexive { block: id });
                }
                let nf = normal_form(p).expect("reflexive polytope has a normal form");
                writeln!(out, "3 {} normal form of block {id}", nf.num_vertices()).unwrap();
                for row in nf.rows() {
                    let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "{}", cells.join(" ")).unwrap();
                }
                out.push('\n');
            }
        }
    }
    Ok(out)
}
