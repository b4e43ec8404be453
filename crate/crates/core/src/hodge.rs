//! Hodge numbers of the Calabi-Yau threefolds obtained by semistable
//! smoothing of normal crossing unions of quasi-Fano threefolds built from a
//! reflexive 3-polytope.
//!
//! Two quasi-Fano families enter. The curve blow-up is the crepant toric
//! desingularization of the Gorenstein Fano associated with the polytope,
//! blown up along one smooth curve cut on the anticanonical K3. The full
//! blow-up instead blows up, sequentially, every irreducible curve the toric
//! boundary cuts on that K3. Gluing two copies of either along the K3 and
//! smoothing gives a Calabi-Yau threefold (the "double" smoothing); gluing
//! the two different blow-ups of the same polytope gives another (the
//! "mixed" smoothing). All Hodge numbers reduce to exact lattice point
//! counts on faces of the polytope and its polar dual.

use crate::error::{Error, Result};
use crate::normal_form::is_self_dual;
use crate::pair::DualPair;
use crate::polytope::LatticePolytope;

/// `(h11, h12)` of a Calabi-Yau threefold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HodgePair {
    pub h11: i64,
    pub h12: i64,
}

impl HodgePair {
    pub fn new(h11: i64, h12: i64) -> Self {
        Self { h11, h12 }
    }
}

/// Topological Euler characteristic `2 (h11 - h12)` of a Calabi-Yau
/// threefold with `h1 = 0` and `h30 = 1`.
pub fn euler_characteristic(p: HodgePair) -> i64 {
    2 * (p.h11 - p.h12)
}

/// The numerical invariants shared by the quasi-Fano threefolds of this
/// crate: `h2`, `h3` and the rank `alpha` of the restriction of the Picard
/// group to the anticanonical K3.
pub trait QuasiFanoInvariants {
    fn h2(&self) -> i64;
    fn h3(&self) -> i64;
    fn alpha(&self) -> i64;

    /// `h12 = h3 / 2`; these threefolds have no holomorphic 3-forms.
    fn h12(&self) -> i64 {
        debug_assert_eq!(self.h3() % 2, 0);
        self.h3() / 2
    }
}

/// Invariants of the quasi-Fano obtained by a single curve blow-up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveBlowupInvariants {
    pub h2: i64,
    pub h3: i64,
    pub alpha: i64,
}

impl QuasiFanoInvariants for CurveBlowupInvariants {
    fn h2(&self) -> i64 {
        self.h2
    }
    fn h3(&self) -> i64 {
        self.h3
    }
    fn alpha(&self) -> i64 {
        self.alpha
    }
}

/// Invariants of the quasi-Fano obtained by the sequential blow-up of all
/// boundary curves on the anticanonical K3: additionally the number `k` of
/// blow-up centers and the genus of the curve sitting over each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullBlowupInvariants {
    pub h2: i64,
    pub h3: i64,
    pub alpha: i64,
    pub k: i64,
    /// Genus of the blow-up curve attached to each vertex of the input
    /// polytope, indexed like its vertex list; equals `l*` of the dual facet.
    pub vertex_genera: Vec<i64>,
}

impl QuasiFanoInvariants for FullBlowupInvariants {
    fn h2(&self) -> i64 {
        self.h2
    }
    fn h3(&self) -> i64 {
        self.h3
    }
    fn alpha(&self) -> i64 {
        self.alpha
    }
}

/// Invariants of the curve blow-up built from a reflexive polytope:
/// `h2 = l(Δ) - 3`, `h3 = 3!vol(Δ°) + 2`, and
/// `alpha = l(Δ) - Σ_facets l* - 4`.
pub fn curve_blowup_invariants(delta: &LatticePolytope) -> Result<CurveBlowupInvariants> {
    let pair = DualPair::new(delta.clone())?;
    Ok(curve_blowup_from_pair(&pair))
}

pub(crate) fn curve_blowup_from_pair(pair: &DualPair) -> CurveBlowupInvariants {
    let inv = CurveBlowupInvariants {
        h2: pair.l() - 3,
        h3: pair.dual_stats().normalized_volume + 2,
        alpha: pair.l() - pair.stats().l_star_sum(2) - 4,
    };
    debug_assert!(inv.h2 >= 2 && inv.h3 >= 2 && inv.h3 % 2 == 0);
    debug_assert!((1..=20).contains(&inv.alpha));
    inv
}

/// Invariants of the full sequential blow-up built from a reflexive
/// polytope, with dual faces taken in its polar dual.
pub fn full_blowup_invariants(pi: &LatticePolytope) -> Result<FullBlowupInvariants> {
    let pair = DualPair::new(pi.clone())?;
    Ok(full_blowup_from_pair(&pair))
}

pub(crate) fn full_blowup_from_pair(pair: &DualPair) -> FullBlowupInvariants {
    let l = pair.l();
    let vertices = pair.delta().faces(0).len() as i64;
    let edge_products = pair.sum_edge_products();
    // Each edge point of the polytope contributes l*(dual edge) + 1 disjoint
    // rational blow-up curves; each vertex contributes one curve of genus
    // l*(dual facet).
    let k = vertices
        + (0..pair.delta().faces(1).len())
            .map(|e| pair.stats().face(1, e).l_star * (pair.l_star_dual_of_edge(e) + 1))
            .sum::<i64>();
    let vertex_genera: Vec<i64> = (0..pair.delta().faces(0).len())
        .map(|v| pair.l_star_dual_of_vertex(v))
        .collect();
    let inv = FullBlowupInvariants {
        h2: (l - 4) + k,
        h3: 2 * vertex_genera.iter().sum::<i64>(),
        alpha: l - pair.stats().l_star_sum(2) - 4 + edge_products,
        k,
        vertex_genera,
    };
    debug_assert!(inv.k >= 4);
    debug_assert!((1..=20).contains(&inv.alpha));
    inv
}

/// Hodge pair of the smoothing of two copies of one quasi-Fano glued along
/// their anticanonical K3: `h11 = 2 h2 - 1 - alpha`,
/// `h12 = 21 + h3 - alpha`.
pub fn double_smoothing_hodge<Q: QuasiFanoInvariants + ?Sized>(q: &Q) -> Result<HodgePair> {
    let h11 = 2 * q.h2() - 1 - q.alpha();
    let h12 = 21 + q.h3() - q.alpha();
    if h11 < 1 || h12 < 0 {
        return Err(Error::InvalidInvariants(format!(
            "double smoothing gives (h11, h12) = ({h11}, {h12})"
        )));
    }
    Ok(HodgePair::new(h11, h12))
}

/// Hodge pair of the smoothing of a normal crossing union of two quasi-Fano
/// threefolds glued along isomorphic anticanonical K3s:
/// `h11 = h11_1 + h11_2 - alpha_joint - 1`,
/// `h12 = 21 + h12_1 + h12_2 - alpha_joint`,
/// where `alpha_joint` is the rank of the span of both restricted Picard
/// groups inside the K3.
pub fn smoothing_hodge(
    h11_1: i64,
    h12_1: i64,
    h11_2: i64,
    h12_2: i64,
    alpha_joint: i64,
) -> Result<HodgePair> {
    if alpha_joint < 1 {
        return Err(Error::InvalidInvariants(format!(
            "joint Picard rank must be positive, got {alpha_joint}"
        )));
    }
    let h11 = h11_1 + h11_2 - alpha_joint - 1;
    let h12 = 21 + h12_1 + h12_2 - alpha_joint;
    if h11 < 1 || h12 < 0 {
        return Err(Error::InvalidInvariants(format!(
            "smoothing gives (h11, h12) = ({h11}, {h12})"
        )));
    }
    Ok(HodgePair::new(h11, h12))
}

/// Hodge pair of the mixed smoothing: the curve blow-up and the full blow-up
/// of the same polytope, glued along their common K3. Closed form:
/// `h11 = l(Δ) + |Δ[0]| + Σ_edges l* + Σ_facets l* - 4` and
/// `h12 = 23 - l(Δ) + l(Δ°) + Σ_v l*(v°) + Σ_facets l* - Σ_edges l*(θ°) l*(θ)`.
pub fn mixed_smoothing_hodge(delta: &LatticePolytope) -> Result<HodgePair> {
    let pair = DualPair::new(delta.clone())?;
    Ok(mixed_smoothing_from_pair(&pair))
}

pub(crate) fn mixed_smoothing_from_pair(pair: &DualPair) -> HodgePair {
    let s = pair.stats();
    let h11 = pair.l() + s.f_vector.0 as i64 + s.l_star_sum(1) + s.l_star_sum(2) - 4;
    let h12 = 23 - pair.l() + pair.l_dual() + pair.sum_vertex_dual_l_star() + s.l_star_sum(2)
        - pair.sum_edge_products();
    HodgePair::new(h11, h12)
}

/// One exact equality of a mirror-symmetry report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorCheck {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
}

impl MirrorCheck {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Outcome of a bundle of mirror-relation checks.
#[derive(Clone, Debug, Default)]
pub struct MirrorReport {
    pub checks: Vec<MirrorCheck>,
}

impl MirrorReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(MirrorCheck::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &MirrorCheck> {
        self.checks.iter().filter(|c| !c.pass())
    }

    fn push(&mut self, name: &'static str, lhs: i64, rhs: i64) {
        self.checks.push(MirrorCheck { name, lhs, rhs });
    }
}

/// Mirror relations between the double smoothing of the curve blow-up of the
/// polytope and the double smoothing of the full blow-up of its polar dual:
/// the Hodge pairs must swap, the Picard ranks must sum to 20, each rank
/// must satisfy its defining relation, and the Euler characteristics must
/// negate.
pub fn mirror_check_double(delta: &LatticePolytope) -> Result<MirrorReport> {
    let pair = DualPair::new(delta.clone())?;
    let dual_pair = DualPair::new(pair.dual().clone())?;
    let x = curve_blowup_from_pair(&pair);
    let y = full_blowup_from_pair(&dual_pair);
    let hx = double_smoothing_hodge(&x)?;
    let hy = double_smoothing_hodge(&y)?;

    let mut report = MirrorReport::default();
    report.push("h11_matches_mirror_h12", hx.h11, hy.h12);
    report.push("h12_matches_mirror_h11", hx.h12, hy.h11);
    report.push("alpha_sum_20", x.alpha + y.alpha, 20);
    report.push("alpha_full_blowup_relation", y.alpha, y.h2 - x.h12() - 1);
    report.push("alpha_curve_blowup_relation", x.alpha, x.h2 - y.h12() - 1);
    report.push(
        "euler_flip",
        euler_characteristic(hx),
        -euler_characteristic(hy),
    );
    Ok(report)
}

/// Mirror relations between the mixed smoothings of a polytope and of its
/// polar dual; for a self-dual polytope, additionally checks that the Hodge
/// pair is its own mirror.
pub fn mirror_check_mixed(delta: &LatticePolytope) -> Result<MirrorReport> {
    let pair = DualPair::new(delta.clone())?;
    let dual_pair = DualPair::new(pair.dual().clone())?;
    let z = mixed_smoothing_from_pair(&pair);
    let zd = mixed_smoothing_from_pair(&dual_pair);

    let mut report = MirrorReport::default();
    report.push("h11_matches_mirror_h12", z.h11, zd.h12);
    report.push("h12_matches_mirror_h11", z.h12, zd.h11);
    if is_self_dual(delta)? {
        report.push("self_mirror_min", z.h11.min(z.h12), zd.h11.min(zd.h12));
        report.push("self_mirror_max", z.h11.max(z.h12), zd.h11.max(zd.h12));
    }
    Ok(report)
}

/// The rank-level mirror-pair predicate for two quasi-Fano threefolds with
/// anticanonical K3 fibrations: both defining rank relations and the rank
/// sum condition coming from K3 mirror symmetry.
pub fn quasi_fano_mirror_predicate<QX, QY>(qx: &QX, qy: &QY) -> MirrorReport
where
    QX: QuasiFanoInvariants + ?Sized,
    QY: QuasiFanoInvariants + ?Sized,
{
    let mut report = MirrorReport::default();
    report.push("alpha_first_relation", qx.alpha(), qx.h2() - qy.h12() - 1);
    report.push("alpha_second_relation", qy.alpha(), qy.h2() - qx.h12() - 1);
    report.push("alpha_sum_20", qx.alpha() + qy.alpha(), 20);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::hull;

    fn example_simplex() -> LatticePolytope {
        hull(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-4, -4, -3]]).unwrap()
    }

    fn p3_simplex() -> LatticePolytope {
        hull(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]).unwrap()
    }

    fn cube() -> LatticePolytope {
        hull(&[
            [-1, -1, -1],
            [-1, -1, 1],
            [-1, 1, -1],
            [-1, 1, 1],
            [1, -1, -1],
            [1, -1, 1],
            [1, 1, -1],
            [1, 1, 1],
        ])
        .unwrap()
    }

    #[test]
    fn curve_blowup_of_example_simplex() {
        let x = curve_blowup_invariants(&example_simplex()).unwrap();
        assert_eq!((x.h2, x.h3, x.alpha), (6, 38, 4));
    }

    #[test]
    fn curve_blowup_of_p3_simplex() {
        let x = curve_blowup_invariants(&p3_simplex()).unwrap();
        assert_eq!((x.h2, x.h3, x.alpha), (2, 66, 1));
    }

    #[test]
    fn curve_blowup_of_cube() {
        // l = 27, 3!vol(octahedron) = 8, facet interior sum = 6.
        let x = curve_blowup_invariants(&cube()).unwrap();
        assert_eq!((x.h2, x.h3, x.alpha), (24, 10, 17));
    }

    #[test]
    fn full_blowup_of_example_dual() {
        let pi = example_simplex().polar_dual().unwrap();
        let y = full_blowup_invariants(&pi).unwrap();
        assert_eq!((y.h2, y.h3, y.alpha), (36, 2, 16));
        assert_eq!(y.k, 19);
        assert_eq!(y.vertex_genera.iter().sum::<i64>(), 1);
    }

    #[test]
    fn alpha_sum_for_p3_simplex() {
        let s = p3_simplex();
        let x = curve_blowup_invariants(&s).unwrap();
        let y = full_blowup_invariants(&s.polar_dual().unwrap()).unwrap();
        assert_eq!(x.alpha + y.alpha, 20);
        assert_eq!(y.alpha, 19);
    }

    #[test]
    fn double_smoothing_pairs() {
        let q = CurveBlowupInvariants {
            h2: 6,
            h3: 38,
            alpha: 4,
        };
        assert_eq!(double_smoothing_hodge(&q).unwrap(), HodgePair::new(7, 55));
        let q = CurveBlowupInvariants {
            h2: 36,
            h3: 2,
            alpha: 16,
        };
        assert_eq!(double_smoothing_hodge(&q).unwrap(), HodgePair::new(55, 7));
        let q = CurveBlowupInvariants {
            h2: 2,
            h3: 66,
            alpha: 1,
        };
        assert_eq!(double_smoothing_hodge(&q).unwrap(), HodgePair::new(2, 86));
    }

    #[test]
    fn smoothing_of_doubled_example() {
        assert_eq!(
            smoothing_hodge(6, 19, 6, 19, 4).unwrap(),
            HodgePair::new(7, 55)
        );
    }

    #[test]
    fn smoothing_matches_double_formula() {
        for p in [cube(), p3_simplex(), example_simplex()] {
            let q = curve_blowup_invariants(&p).unwrap();
            assert_eq!(
                double_smoothing_hodge(&q).unwrap(),
                smoothing_hodge(q.h2, q.h12(), q.h2, q.h12(), q.alpha).unwrap()
            );
        }
    }

    #[test]
    fn mixed_smoothing_of_example() {
        let d = example_simplex();
        assert_eq!(mixed_smoothing_hodge(&d).unwrap(), HodgePair::new(13, 37));
        let dual = d.polar_dual().unwrap();
        assert_eq!(
            mixed_smoothing_hodge(&dual).unwrap(),
            HodgePair::new(37, 13)
        );
    }

    #[test]
    fn mixed_smoothing_agrees_with_smoothing_route() {
        // The joint Picard rank of the mixed union is the full blow-up's.
        for p in [cube(), p3_simplex(), example_simplex()] {
            let x = curve_blowup_invariants(&p).unwrap();
            let y = full_blowup_invariants(&p).unwrap();
            let via_smoothing = smoothing_hodge(x.h2, x.h12(), y.h2, y.h12(), y.alpha).unwrap();
            assert_eq!(mixed_smoothing_hodge(&p).unwrap(), via_smoothing);
        }
    }

    #[test]
    fn mixed_smoothing_inputs_for_example() {
        // Frozen oracle values for the two components of the mixed union.
        let d = example_simplex();
        let x = curve_blowup_invariants(&d).unwrap();
        let y = full_blowup_invariants(&d).unwrap();
        assert_eq!((x.h2, x.h12()), (6, 19));
        assert_eq!((y.h2, y.h12(), y.alpha), (18, 7, 10));
        assert_eq!(
            smoothing_hodge(6, 19, 18, 7, 10).unwrap(),
            HodgePair::new(13, 37)
        );
    }

    #[test]
    fn mirror_double_example() {
        let r = mirror_check_double(&example_simplex()).unwrap();
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn mirror_double_p3() {
        let r = mirror_check_double(&p3_simplex()).unwrap();
        assert!(r.all_pass());
        let x = curve_blowup_invariants(&p3_simplex()).unwrap();
        let h = double_smoothing_hodge(&x).unwrap();
        assert_eq!(h, HodgePair::new(2, 86));
    }

    #[test]
    fn mirror_mixed_example_and_cube() {
        for p in [example_simplex(), cube()] {
            let r = mirror_check_mixed(&p).unwrap();
            assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn self_dual_polytope_is_self_mirror() {
        let p = hull(&[
            [-1, -1, 1],
            [-1, 0, -1],
            [-1, 0, 1],
            [1, -1, 1],
            [1, 0, -1],
            [1, 0, 1],
            [1, 1, -1],
        ])
        .unwrap();
        assert!(crate::normal_form::is_self_dual(&p).unwrap());
        let r = mirror_check_mixed(&p).unwrap();
        assert!(r.checks.iter().any(|c| c.name == "self_mirror_min"));
        assert!(r.all_pass());
        // A self-mirror threefold has a balanced Hodge pair.
        let z = mixed_smoothing_hodge(&p).unwrap();
        assert_eq!(z.h11, z.h12);
    }

    #[test]
    fn predicate_accepts_example_pair() {
        let x = CurveBlowupInvariants {
            h2: 6,
            h3: 38,
            alpha: 4,
        };
        let y = CurveBlowupInvariants {
            h2: 36,
            h3: 2,
            alpha: 16,
        };
        assert!(quasi_fano_mirror_predicate(&x, &y).all_pass());
    }

    #[test]
    fn predicate_rejects_mismatched_pair() {
        // A pair that cannot be mirror: ranks sum past 20.
        let q = CurveBlowupInvariants {
            h2: 24,
            h3: 14,
            alpha: 19,
        };
        let r = quasi_fano_mirror_predicate(&q, &q);
        assert!(!r.all_pass());
        let sum = r.checks.iter().find(|c| c.name == "alpha_sum_20").unwrap();
        assert_eq!((sum.lhs, sum.rhs), (38, 20));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_characteristic(HodgePair::new(7, 55)), -96);
        assert_eq!(euler_characteristic(HodgePair::new(55, 7)), 96);
        assert_eq!(euler_characteristic(HodgePair::new(2, 86)), -168);
    }

    #[test]
    fn smoothing_rejects_bad_rank() {
        assert!(matches!(
            smoothing_hodge(2, 2, 2, 2, 0),
            Err(Error::InvalidInvariants(_))
        ));
    }
}
