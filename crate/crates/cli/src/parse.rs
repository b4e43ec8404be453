//! The vertex file format.
//!
//! A file is a sequence of blocks. Each block starts with a header line of
//! two integers `r c` with `{r, c} = {3, n}` and `4 <= n <= 14`; anything
//! after the two integers is a free-text annotation and is ignored. The next
//! `r` lines carry `c` integers each. Vertices are the columns when `r = 3`,
//! the rows otherwise. Blank lines between blocks and lines starting with
//! `#` are ignored.

use polymirror_core::{Error as CoreError, LatticePoint, LatticePolytope, MAX_COORD};

use crate::error::{CliError, Result};

const MIN_VERTICES: usize = 4;
const MAX_VERTICES: usize = 14;

/// Parses every block of a vertex file into polytopes, in file order.
pub fn parse_vertex_file(input: &str) -> Result<Vec<LatticePolytope>> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#'));
    let mut polytopes = Vec::new();
    let mut block = 0usize;

    while let Some((line_no, line)) = lines.next() {
        if line.trim().is_empty() {
            continue;
        }
        block += 1;
        let (rows, cols) = parse_header(line_no, line)?;
        let mut matrix: Vec<Vec<i64>> = Vec::with_capacity(rows);
        while matrix.len() < rows {
            let Some((data_no, data)) = lines.next() else {
                return Err(CliError::Parse {
                    line: line_no,
                    msg: format!("block truncated: expected {rows} data lines"),
                });
            };
            if data.trim().is_empty() {
                return Err(CliError::Parse {
                    line: data_no,
                    msg: "blank line inside a block".into(),
                });
            }
            matrix.push(parse_data_line(data_no, data, cols)?);
        }
        let vertices = if rows == 3 {
            (0..cols)
                .map(|j| LatticePoint::new(matrix[0][j], matrix[1][j], matrix[2][j]))
                .collect::<Vec<_>>()
        } else {
            matrix
                .iter()
                .map(|r| LatticePoint::new(r[0], r[1], r[2]))
                .collect()
        };
        match LatticePolytope::hull_from_points(&vertices) {
            Ok(p) => polytopes.push(p),
            Err(e @ CoreError::DegenerateInput { .. }) => {
                return Err(CliError::Degenerate { block, source: e });
            }
            Err(e) => {
                return Err(CliError::Degenerate { block, source: e });
            }
        }
    }
    Ok(polytopes)
}

fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut tokens = line.split_whitespace();
    let mut next_int = |what: &str| -> Result<usize> {
        let tok = tokens.next().ok_or_else(|| CliError::Parse {
            line: line_no,
            msg: format!("missing {what} in block header"),
        })?;
        tok.parse().map_err(|_| CliError::Parse {
            line: line_no,
            msg: format!("invalid {what} {tok:?} in block header"),
        })
    };
    let r = next_int("row count")?;
    let c = next_int("column count")?;
    let vertex_range = MIN_VERTICES..=MAX_VERTICES;
    if r == 3 && vertex_range.contains(&c) || c == 3 && vertex_range.contains(&r) {
        Ok((r, c))
    } else {
        Err(CliError::Parse {
            line: line_no,
            msg: format!(
                "header {r} {c}: expected 3 n or n 3 with {MIN_VERTICES} <= n <= {MAX_VERTICES}"
            ),
        })
    }
}

fn parse_data_line(line_no: usize, line: &str, expected: usize) -> Result<Vec<i64>> {
    let mut values = Vec::with_capacity(expected);
    for tok in line.split_whitespace() {
        let v: i64 = tok.parse().map_err(|_| CliError::Parse {
            line: line_no,
            msg: format!("invalid integer {tok:?}"),
        })?;
        if v.abs() > MAX_COORD {
            return Err(CliError::Parse {
                line: line_no,
                msg: format!("coordinate {v} exceeds supported magnitude {MAX_COORD}"),
            });
        }
        values.push(v);
    }
    if values.len() != expected {
        return Err(CliError::Parse {
            line: line_no,
            msg: format!("expected {expected} integers, found {}", values.len()),
        });
    }
    Ok(values)
}

/// Writes one polytope as a `3 n` block, vertices as columns.
pub fn write_vertex_block(out: &mut String, p: &LatticePolytope, annotation: &str) {
    use std::fmt::Write;
    let vs = p.vertices();
    if annotation.is_empty() {
        writeln!(out, "3 {}", vs.len()).unwrap();
    } else {
        writeln!(out, "3 {} {}", vs.len(), annotation).unwrap();
    }
    for coord in [
        |v: &LatticePoint| v.x,
        |v: &LatticePoint| v.y,
        |v: &LatticePoint| v.z,
    ] {
        let row: Vec<String> = vs.iter().map(|v| coord(v).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
}
