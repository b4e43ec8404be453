//! Canonical forms for reflexive polytopes under `GL(3, Z)`.
//!
//! Two reflexive polytopes are equivalent when a lattice-preserving linear
//! map carries one vertex set onto the other (the origin is pinned as the
//! unique interior point, so no translations are involved). The canonical
//! form is computed from the vertex-facet pairing matrix, which is a
//! `GL(3, Z)` invariant: maximize it over row and column permutations, then
//! reduce the vertex matrix to Hermite normal form under every maximizing
//! column order and keep the lexicographically smallest result.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::point::narrow;
use crate::polytope::LatticePolytope;

/// Canonical vertex matrix of a reflexive polytope: 3 rows, one column per
/// vertex. Equal normal forms characterize `GL(3, Z)` equivalence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalForm {
    rows: [Vec<i64>; 3],
}

impl NormalForm {
    pub fn rows(&self) -> &[Vec<i64>; 3] {
        &self.rows
    }

    pub fn num_vertices(&self) -> usize {
        self.rows[0].len()
    }

    /// Compact one-line serialization, usable as a grouping key.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Computes the canonical form of a reflexive polytope.
pub fn normal_form(p: &LatticePolytope) -> Result<NormalForm> {
    if !p.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let pm = pairing_matrix(p);
    let orders = maximizing_column_orders(&pm);
    debug_assert!(!orders.is_empty());

    let mut best: Option<[Vec<i64>; 3]> = None;
    for order in orders {
        let mut rows: [Vec<i64>; 3] = [
            order.iter().map(|&j| p.vertices()[j].x).collect(),
            order.iter().map(|&j| p.vertices()[j].y).collect(),
            order.iter().map(|&j| p.vertices()[j].z).collect(),
        ];
        hermite_reduce(&mut rows);
        if best.as_ref().is_none_or(|b| rows < *b) {
            best = Some(rows);
        }
    }
    Ok(NormalForm {
        rows: best.unwrap(),
    })
}

/// Whether two reflexive polytopes are related by a lattice-preserving
/// linear transformation.
pub fn is_equivalent(p: &LatticePolytope, q: &LatticePolytope) -> Result<bool> {
    Ok(normal_form(p)? == normal_form(q)?)
}

/// Whether a reflexive polytope is equivalent to its own polar dual.
pub fn is_self_dual(p: &LatticePolytope) -> Result<bool> {
    is_equivalent(p, &p.polar_dual()?)
}

fn pairing_matrix(p: &LatticePolytope) -> Vec<Vec<i64>> {
    p.facets()
        .iter()
        .map(|f| p.vertices().iter().map(|&v| f.normal.dot(v)).collect())
        .collect()
}

/// One branch of the pairing-matrix maximization: which facet rows have been
/// placed, and the ordered partition of columns whose internal order is still
/// free.
#[derive(Clone, PartialEq, Eq, Hash)]
struct SearchState {
    used_rows: u32,
    blocks: Vec<Vec<usize>>,
}

/// All column orders that, together with some row order, realize the
/// lexicographically maximal pairing matrix (row-major comparison).
fn maximizing_column_orders(pm: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let nf = pm.len();
    let nv = pm[0].len();
    assert!(nf <= 32, "pairing matrix too large");

    let mut states = vec![SearchState {
        used_rows: 0,
        blocks: vec![(0..nv).collect()],
    }];

    for _ in 0..nf {
        let mut best_key: Option<Vec<i64>> = None;
        let mut next: Vec<SearchState> = Vec::new();
        let mut seen: HashSet<(u32, Vec<Vec<usize>>)> = HashSet::new();
        for st in &states {
            for (r, row) in pm.iter().enumerate() {
                if st.used_rows & (1 << r) != 0 {
                    continue;
                }
                let (key, blocks) = arrange_row(row, &st.blocks);
                let better = match &best_key {
                    None => std::cmp::Ordering::Greater,
                    Some(b) => key.cmp(b),
                };
                match better {
                    std::cmp::Ordering::Greater => {
                        best_key = Some(key);
                        next.clear();
                        seen.clear();
                        let cand = SearchState {
                            used_rows: st.used_rows | (1 << r),
                            blocks,
                        };
                        seen.insert((cand.used_rows, cand.blocks.clone()));
                        next.push(cand);
                    }
                    std::cmp::Ordering::Equal => {
                        let cand = SearchState {
                            used_rows: st.used_rows | (1 << r),
                            blocks,
                        };
                        if seen.insert((cand.used_rows, cand.blocks.clone())) {
                            next.push(cand);
                        }
                    }
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        states = next;
    }

    // Distinct vertices pair differently against the full facet set, so by
    // now every block is a singleton.
    let mut orders: Vec<Vec<usize>> = states
        .into_iter()
        .map(|st| {
            st.blocks
                .iter()
                .map(|b| {
                    debug_assert_eq!(b.len(), 1);
                    b[0]
                })
                .collect()
        })
        .collect();
    orders.sort_unstable();
    orders.dedup();
    orders
}

/// Sorts one row's values descending within each free block: returns the row
/// as placed (the comparison key) and the refined block partition.
fn arrange_row(row: &[i64], blocks: &[Vec<usize>]) -> (Vec<i64>, Vec<Vec<usize>>) {
    let mut key = Vec::with_capacity(row.len());
    let mut refined = Vec::with_capacity(blocks.len());
    for block in blocks {
        let mut cols: Vec<usize> = block.clone();
        cols.sort_unstable_by(|&a, &b| row[b].cmp(&row[a]).then(a.cmp(&b)));
        let mut start = 0;
        while start < cols.len() {
            let value = row[cols[start]];
            let mut end = start + 1;
            while end < cols.len() && row[cols[end]] == value {
                end += 1;
            }
            refined.push(cols[start..end].to_vec());
            key.extend(std::iter::repeat_n(value, end - start));
            start = end;
        }
    }
    (key, refined)
}

/// In-place row Hermite normal form of a full-row-rank 3 x n matrix:
/// pivots positive, entries above each pivot reduced into `[0, pivot)`.
/// This is the canonical representative for left multiplication by
/// `GL(3, Z)`.
fn hermite_reduce(rows: &mut [Vec<i64>; 3]) {
    let n = rows[0].len();
    let mut r = 0;
    for j in 0..n {
        if r == 3 {
            break;
        }
        loop {
            let mut pivot: Option<usize> = None;
            for i in r..3 {
                if rows[i][j] != 0 && pivot.is_none_or(|p| rows[i][j].abs() < rows[p][j].abs()) {
                    pivot = Some(i);
                }
            }
            let Some(p) = pivot else {
                break;
            };
            rows.swap(p, r);
            let mut reduced = true;
            for i in r + 1..3 {
                if rows[i][j] != 0 {
                    let q = rows[i][j] / rows[r][j];
                    row_sub(rows, i, r, q);
                    if rows[i][j] != 0 {
                        reduced = false;
                    }
                }
            }
            if reduced {
                break;
            }
        }
        if rows[r][j] != 0 {
            if rows[r][j] < 0 {
                for v in rows[r].iter_mut() {
                    *v = -*v;
                }
            }
            for i in 0..r {
                let q = rows[i][j].div_euclid(rows[r][j]);
                row_sub(rows, i, r, q);
            }
            r += 1;
        }
    }
    assert_eq!(r, 3, "vertex matrix does not have full rank");
}

fn row_sub(rows: &mut [Vec<i64>; 3], dst: usize, src: usize, q: i64) {
    if q == 0 {
        return;
    }
    for k in 0..rows[0].len() {
        let s = rows[src][k];
        let d = rows[dst][k];
        rows[dst][k] = narrow(d as i128 - q as i128 * s as i128);
    }
}
