//! Human-readable reports for the inspection subcommands.

use std::fmt::Write;

use polymirror_core::{
    compare_reference, curve_blowup_invariants, full_blowup_invariants, kernel_generator, lambda,
    mirror_check_double, mirror_check_mixed, p3_double_smoothing_cubic,
    quasi_fano_mirror_predicate, verify_identities, FaceCount, LatticePolytope, MirrorReport,
    PolytopeStats,
};

use crate::batch::BatchEntry;
use crate::error::{CliError, Result};

fn mark(pass: bool) -> &'static str {
    if pass {
        "ok"
    } else {
        "FAIL"
    }
}

/// Reflexivity plus the full identity report for one block.
pub fn check_block(out: &mut String, id: usize, p: &LatticePolytope) -> Result<bool> {
    writeln!(out, "block {id}: {} vertices", p.vertices().len()).unwrap();
    if !p.is_reflexive() {
        writeln!(out, "  not reflexive").unwrap();
        return Ok(false);
    }
    let report = verify_identities(p, &id.to_string()).map_err(|e| CliError::TheoremViolation {
        block: id,
        detail: e.to_string(),
    })?;
    for c in &report.checks {
        writeln!(
            out,
            "  {:28} {:>6} = {:<6} {}",
            c.name,
            c.lhs,
            c.rhs,
            mark(c.pass())
        )
        .unwrap();
    }
    if !report.all_pass() {
        return Err(CliError::TheoremViolation {
            block: id,
            detail: "identity checks failed".into(),
        });
    }
    Ok(true)
}

fn face_table(out: &mut String, label: &str, counts: &[FaceCount]) {
    let l: Vec<String> = counts.iter().map(|c| c.l.to_string()).collect();
    let ls: Vec<String> = counts.iter().map(|c| c.l_star.to_string()).collect();
    writeln!(out, "  {label:7} l  = [{}]", l.join(", ")).unwrap();
    writeln!(out, "  {label:7} l* = [{}]", ls.join(", ")).unwrap();
}

/// f-vector, point counts and volumes for one block.
pub fn stats_block(out: &mut String, id: usize, p: &LatticePolytope) {
    let s = PolytopeStats::compute(p);
    writeln!(
        out,
        "block {id}: f = {:?}, l = {}, 3!vol = {}",
        s.f_vector, s.l_total, s.normalized_volume
    )
    .unwrap();
    face_table(out, "edges", s.faces(1));
    face_table(out, "facets", s.faces(2));
    if let Ok(dual) = p.polar_dual() {
        let d = PolytopeStats::compute(&dual);
        writeln!(
            out,
            "  dual:  f = {:?}, l = {}, 3!vol = {}",
            d.f_vector, d.l_total, d.normalized_volume
        )
        .unwrap();
    }
}

/// The four Hodge pairs and the underlying invariants for one record.
pub fn hodge_block(out: &mut String, entry: &BatchEntry) {
    match entry {
        BatchEntry::Skipped(s) => writeln!(out, "block {}: skipped ({})", s.id, s.reason).unwrap(),
        BatchEntry::Ok(r) => {
            writeln!(out, "block {}:", r.id).unwrap();
            writeln!(
                out,
                "  curve blow-up        (h2, h3, alpha) = ({}, {}, {})",
                r.x_inv.h2, r.x_inv.h3, r.x_inv.alpha
            )
            .unwrap();
            writeln!(
                out,
                "  full blow-up of dual (h2, h3, alpha) = ({}, {}, {}), k = {}",
                r.y_inv_dual.h2,
                r.y_inv_dual.h3,
                r.y_inv_dual.alpha,
                r.y_inv_dual.k.unwrap_or(0)
            )
            .unwrap();
            writeln!(
                out,
                "  double smoothing   (h11, h12) = ({}, {}) / mirror ({}, {})",
                r.hodge_x[0], r.hodge_x[1], r.hodge_y[0], r.hodge_y[1]
            )
            .unwrap();
            writeln!(
                out,
                "  mixed smoothing    (h11, h12) = ({}, {}) / dual   ({}, {})",
                r.hodge_mixed[0], r.hodge_mixed[1], r.hodge_mixed_dual[0], r.hodge_mixed_dual[1]
            )
            .unwrap();
        }
    }
}

fn mirror_lines(out: &mut String, title: &str, report: &MirrorReport) {
    writeln!(out, "  {title}:").unwrap();
    for c in &report.checks {
        writeln!(
            out,
            "    {:28} {:>6} = {:<6} {}",
            c.name,
            c.lhs,
            c.rhs,
            mark(c.pass())
        )
        .unwrap();
    }
}

/// All mirror reports for one block.
pub fn mirror_block(out: &mut String, id: usize, p: &LatticePolytope) -> Result<()> {
    let internal = |e: polymirror_core::Error| CliError::TheoremViolation {
        block: id,
        detail: e.to_string(),
    };
    writeln!(out, "block {id}:").unwrap();
    let double = mirror_check_double(p).map_err(internal)?;
    let mixed = mirror_check_mixed(p).map_err(internal)?;
    let x = curve_blowup_invariants(p).map_err(internal)?;
    let y_dual = full_blowup_invariants(&p.polar_dual().map_err(internal)?).map_err(internal)?;
    let predicate = quasi_fano_mirror_predicate(&x, &y_dual);
    mirror_lines(out, "double smoothing", &double);
    mirror_lines(out, "mixed smoothing", &mixed);
    mirror_lines(out, "rank-level predicate", &predicate);
    if !(double.all_pass() && mixed.all_pass() && predicate.all_pass()) {
        return Err(CliError::TheoremViolation {
            block: id,
            detail: "mirror checks failed".into(),
        });
    }
    Ok(())
}

/// The full lambda-invariant derivation for the projective-space example.
pub fn lambda_report() -> String {
    let mut out = String::new();
    let l = p3_double_smoothing_cubic();
    writeln!(
        out,
        "double smoothing over projective 3-space, blown up along a degree-16 genus-33 curve"
    )
    .unwrap();
    writeln!(
        out,
        "cubic form on (h1, h2):  h1^3 = {}, h1^2 h2 = {}, h1 h2^2 = {}, h2^3 = {}",
        l.cubic[0], l.cubic[1], l.cubic[2], l.cubic[3]
    )
    .unwrap();
    writeln!(
        out,
        "second Chern pairing:    c2 . h1 = {}, c2 . h2 = {}",
        l.c2_pairing[0], l.c2_pairing[1]
    )
    .unwrap();
    let (a, b) = kernel_generator(&l).expect("pairing is nonzero");
    writeln!(out, "kernel generator:        m = {a} h1 + ({b}) h2").unwrap();
    let value = lambda(&l).expect("pairing is nonzero");
    writeln!(out, "lambda = |m^3| = {value}").unwrap();
    let cmp = compare_reference(value);
    writeln!(
        out,
        "reference lambda values (toric fourfold hypersurfaces with the same Hodge pair):"
    )
    .unwrap();
    for (id, lam) in polymirror_core::REFERENCE_LAMBDAS {
        let note = if lam == value { "  <- match" } else { "" };
        writeln!(out, "  polytope id {id:>2}: {lam}{note}").unwrap();
    }
    if cmp.distinct() {
        writeln!(
            out,
            "distinct from all ten: not homeomorphic to any of the reference threefolds"
        )
        .unwrap();
    } else {
        writeln!(out, "matches {} reference value(s)", cmp.matches.len()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_vertex_file;

    #[test]
    fn lambda_report_contains_derivation() {
        let r = lambda_report();
        assert!(r.contains("c2 . h1 = 44, c2 . h2 = 24"));
        assert!(r.contains("m = 6 h1 + (-11) h2"));
        assert!(r.contains("lambda = |m^3| = 4320"));
        assert!(r.contains("distinct from all ten"));
    }

    #[test]
    fn check_reports_non_reflexive() {
        let polys = parse_vertex_file("3 4\n2 0 0 -2\n0 2 0 -2\n0 0 2 -2\n").unwrap();
        let mut out = String::new();
        let reflexive = check_block(&mut out, 1, &polys[0]).unwrap();
        assert!(!reflexive);
        assert!(out.contains("not reflexive"));
    }
}
