//! Exact integer geometry of reflexive 3-polytopes and the numerical mirror
//! symmetry of the Calabi-Yau threefolds built from them by smoothing.
//!
//! The kernel works entirely over `Z`: convex hulls with primitive facet
//! inequalities and a full face lattice, polar duality, lattice point
//! counts on faces, normalized volumes, and `GL(3, Z)` normal forms. On top
//! of it sit the counting identities every reflexive 3-polytope satisfies,
//! the Hodge numbers of the four smoothing families a polytope generates,
//! the mirror-relation checks between them, and the lambda invariant that
//! separates the projective-space example from the toric-fourfold
//! hypersurface catalogue.
//!
//! Everything is deterministic and there is no floating point anywhere.

pub mod counting;
pub mod error;
pub mod hodge;
pub mod identities;
pub mod lambda;
pub mod normal_form;
pub mod pair;
pub mod point;
pub mod polytope;

pub use counting::{enumerate_lattice_points, face_point_counts, FaceCount, PolytopeStats};
pub use error::{Error, Result};
pub use hodge::{
    curve_blowup_invariants, double_smoothing_hodge, euler_characteristic, full_blowup_invariants,
    mirror_check_double, mirror_check_mixed, mixed_smoothing_hodge, quasi_fano_mirror_predicate,
    smoothing_hodge, CurveBlowupInvariants, FullBlowupInvariants, HodgePair, MirrorCheck,
    MirrorReport, QuasiFanoInvariants,
};
pub use identities::{verify_identities, IdentityCheck, IdentityReport};
pub use lambda::{
    blowup_c2_data, blowup_intersection_data, compare_reference, kernel_generator, lambda,
    p3_double_smoothing_cubic, CubicLattice2, ReferenceComparison, REFERENCE_LAMBDAS,
};
pub use normal_form::{is_equivalent, is_self_dual, normal_form, NormalForm};
pub use pair::DualPair;
pub use point::{det3, gcd, LatticePoint, ORIGIN};
pub use polytope::{hull, Face, FaceLattice, Facet, LatticePolytope, MAX_COORD};
