use thiserror::Error;

/// Errors produced by the geometry kernel and the invariant calculators.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input point set does not affinely span 3-space.
    #[error("degenerate input: points span an affine space of dimension {dim}, expected 3")]
    DegenerateInput { dim: usize },

    /// The operation requires a reflexive polytope.
    #[error("polytope is not reflexive")]
    NotReflexive,

    /// A face was passed that does not belong to the polytope it was used with.
    #[error("face does not belong to this polytope")]
    FaceNotOfPolytope,

    /// Invariants that cannot come from the constructions of this crate.
    #[error("invalid invariants: {0}")]
    InvalidInvariants(String),

    /// The second Chern functional vanishes, so the lambda invariant is undefined.
    #[error("second Chern functional is zero; lambda invariant is undefined")]
    ZeroChernFunctional,
}

pub type Result<T> = std::result::Result<T, Error>;
