//! The closed-form counting identities that every reflexive 3-polytope
//! satisfies: the volume/point-count relation on both sides of the duality,
//! the 24- and 28-identities over dual edge pairs, the boundary point
//! decompositions and the Euler formula.
//!
//! These are theorems, so the report doubles as a structural self-test: a
//! single failing check means the geometry kernel (not the polytope) is
//! broken.

use crate::error::Result;
use crate::pair::DualPair;
use crate::polytope::LatticePolytope;

/// One exact integer identity, kept as both sides so a regression localizes
/// to a specific count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
}

impl IdentityCheck {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluation of every identity for one polytope.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub polytope_id: String,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(IdentityCheck::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.pass())
    }
}

/// Evaluates all counting identities for a reflexive polytope and its dual.
pub fn verify_identities(delta: &LatticePolytope, id: &str) -> Result<IdentityReport> {
    let pair = DualPair::new(delta.clone())?;
    Ok(report_for_pair(&pair, id))
}

pub(crate) fn report_for_pair(pair: &DualPair, id: &str) -> IdentityReport {
    let s = pair.stats();
    let d = pair.dual_stats();
    let (v0, e0, f0) = s.f_vector;
    let (v1, e1, f1) = d.f_vector;

    let mut checks = Vec::with_capacity(9);
    let mut push = |name: &'static str, lhs: i64, rhs: i64| {
        checks.push(IdentityCheck { name, lhs, rhs });
    };

    push("volume_primal", s.normalized_volume, 2 * pair.l() - 6);
    push("volume_dual", d.normalized_volume, 2 * pair.l_dual() - 6);
    push("edge_pairing_24", pair.sum_edge_products_shifted(), 24);
    push(
        "dual_pair_28",
        pair.l() + pair.l_dual() + pair.sum_edge_products()
            - pair.sum_vertex_dual_l_star()
            - s.l_star_sum(2),
        28,
    );
    push(
        "dual_point_decomposition",
        pair.l_dual(),
        pair.sum_vertex_dual_l_star() + pair.sum_edge_dual_l_star() + f0 as i64 + 1,
    );
    push("euler_primal", v0 as i64 - e0 as i64 + f0 as i64, 2);
    push("euler_dual", v1 as i64 - e1 as i64 + f1 as i64, 2);
    push(
        "point_decomposition_primal",
        pair.l(),
        s.l_star_sum(2) + s.l_star_sum(1) + v0 as i64 + 1,
    );
    push(
        "point_decomposition_dual",
        pair.l_dual(),
        d.l_star_sum(2) + d.l_star_sum(1) + v1 as i64 + 1,
    );

    IdentityReport {
        polytope_id: id.to_string(),
        checks,
    }
}
