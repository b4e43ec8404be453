//! The lambda invariant of threefolds with second Betti number 2.
//!
//! On `H^2(M, Z)` modulo torsion, the cubic cup form together with the
//! linear functional `c2(M) · -` leaves a distinguished line: the kernel of
//! the functional. With a primitive generator `m` of that line,
//! `lambda(M) = |m^3|` is a topological invariant, insensitive to the choice
//! of basis and of generator sign. It separates threefolds whose Hodge
//! numbers coincide.
//!
//! The instance computed here is the smoothing of two copies of a blow-up of
//! projective 3-space along a degree-16, genus-33 curve on a quartic K3,
//! whose `(h11, h12) = (2, 86)` collides with exactly ten threefolds from
//! the toric-fourfold hypersurface catalogue.

use crate::error::{Error, Result};
use crate::point::{gcd, narrow};

/// A rank-2 free abelian group with a symmetric cubic form and the pairing
/// against the second Chern class.
///
/// `cubic = [c30, c21, c12, c03]` are the values on the basis `(h1, h2)`:
/// `h1^3, h1^2 h2, h1 h2^2, h2^3`. `c2_pairing = [c2·h1, c2·h2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CubicLattice2 {
    pub cubic: [i64; 4],
    pub c2_pairing: [i64; 2],
}

impl CubicLattice2 {
    /// Value of the cubic form on `a·h1 + b·h2`.
    pub fn eval(&self, a: i64, b: i64) -> i64 {
        let [c30, c21, c12, c03] = self.cubic;
        let (a, b) = (a as i128, b as i128);
        narrow(
            a * a * a * c30 as i128
                + 3 * a * a * b * c21 as i128
                + 3 * a * b * b * c12 as i128
                + b * b * b * c03 as i128,
        )
    }

    /// Pairing of `c2` with `a·h1 + b·h2`.
    pub fn c2_dot(&self, a: i64, b: i64) -> i64 {
        narrow(a as i128 * self.c2_pairing[0] as i128 + b as i128 * self.c2_pairing[1] as i128)
    }
}

/// Cubic intersection numbers on the blow-up of projective 3-space along a
/// smooth curve of the given degree and genus, in the basis (hyperplane
/// pullback `H`, exceptional divisor `E`): returns
/// `(H^3, H^2 E, H E^2, E^3) = (1, 0, -degree, -4·degree + 2 - 2·genus)`.
pub fn blowup_intersection_data(degree: i64, genus: i64) -> (i64, i64, i64, i64) {
    assert!(degree >= 1, "blow-up curve must have positive degree");
    assert!(genus >= 0, "blow-up curve must have nonnegative genus");
    let canonical_dot_curve = -4 * degree;
    (1, 0, -degree, canonical_dot_curve + 2 - 2 * genus)
}

/// Pairing of `c2` of the blow-up with `H` and with `E`:
/// `c2·H = 6 + degree` (the 6 from projective 3-space plus the curve class)
/// and `c2·E = 4·degree`.
pub fn blowup_c2_data(degree: i64) -> (i64, i64) {
    assert!(degree >= 1, "blow-up curve must have positive degree");
    (6 + degree, 4 * degree)
}

/// The rank-2 cubic lattice of the double smoothing built on projective
/// 3-space: both components are blow-ups along a degree-16, genus-33 curve
/// (a quartic-surface section of a quartic K3), and the basis is
/// `h1 = (H, H)`, `h2 = (4H - E, 0)` with mixed products zero.
pub fn p3_double_smoothing_cubic() -> CubicLattice2 {
    let (hhh, hhe, hee, eee) = blowup_intersection_data(16, 33);
    // h1^3 sums H^3 over the two components; h2 lives on one component only.
    let c30 = 2 * hhh;
    let c21 = 4 * hhh - hhe;
    let c12 = 16 * hhh - 8 * hhe + hee;
    let c03 = 64 * hhh - 48 * hhe + 12 * hee - eee;
    let (c2_h, c2_e) = blowup_c2_data(16);
    CubicLattice2 {
        cubic: [c30, c21, c12, c03],
        c2_pairing: [2 * c2_h, 4 * c2_h - c2_e],
    }
}

/// Primitive generator `(a, b)` of the kernel of the `c2` functional,
/// sign-normalized so the first nonzero entry is positive. Fails when the
/// functional is zero (the invariant is undefined there).
pub fn kernel_generator(l: &CubicLattice2) -> Result<(i64, i64)> {
    let [p, q] = l.c2_pairing;
    if p == 0 && q == 0 {
        return Err(Error::ZeroChernFunctional);
    }
    let g = gcd(p, q);
    let (mut a, mut b) = (q / g, -p / g);
    let leading = if a != 0 { a } else { b };
    if leading < 0 {
        (a, b) = (-a, -b);
    }
    debug_assert_eq!(l.c2_dot(a, b), 0);
    debug_assert_eq!(gcd(a, b), 1);
    Ok((a, b))
}

/// `|m^3|` for a primitive generator `m` of the `c2`-orthogonal line.
pub fn lambda(l: &CubicLattice2) -> Result<i64> {
    let (a, b) = kernel_generator(l)?;
    Ok(l.eval(a, b).abs())
}

/// Lambda invariants of the ten Calabi-Yau threefolds with `(h11, h12) =
/// (2, 86)` arising as desingularized anticanonical hypersurfaces in
/// Gorenstein toric Fano fourfolds, keyed by the polytope id of the standard
/// toric-fourfold database. One polytope (id 13) carries two distinct
/// threefolds.
pub const REFERENCE_LAMBDAS: [(u32, i64); 10] = [
    (12, 1404),
    (13, 108),
    (13, 1564),
    (14, 3456),
    (15, 17280),
    (16, 17946),
    (17, 137214),
    (18, 67230),
    (19, 258198),
    (20, 457050),
];

/// Result of comparing a lambda value against [`REFERENCE_LAMBDAS`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceComparison {
    pub lambda: i64,
    /// Entries of the reference list with exactly this lambda value.
    pub matches: Vec<(u32, i64)>,
}

impl ReferenceComparison {
    /// True when the value differs from every reference entry, i.e. the
    /// threefold is homeomorphic to none of the ten.
    pub fn distinct(&self) -> bool {
        self.matches.is_empty()
    }
}

/// Compares a lambda value against the toric-fourfold reference list.
pub fn compare_reference(lambda: i64) -> ReferenceComparison {
    ReferenceComparison {
        lambda,
        matches: REFERENCE_LAMBDAS
            .iter()
            .copied()
            .filter(|&(_, l)| l == lambda)
            .collect(),
    }
}
