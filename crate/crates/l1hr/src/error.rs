//! Error type shared across the crate.

/// Errors produced by tensor algebra, decompositions and the recovery pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Mode index outside {1, 2, 3}.
    #[error("invalid mode index {0}; third-order tensors have modes 1, 2 and 3")]
    InvalidMode(usize),

    /// Shapes of the operands do not conform.
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    /// An operation that needs a nonzero matrix received an all-zero one.
    #[error("matrix is identically zero")]
    ZeroMatrix,

    /// Requested subspace rank exceeds what the operand supports.
    #[error("rank {requested} exceeds maximum {max}")]
    RankTooLarge { requested: usize, max: usize },

    /// A linear system that must have full column rank does not.
    #[error("rank-deficient system: {0}")]
    RankDeficient(String),

    /// Columns are not orthonormal to the required tolerance.
    #[error("matrix is not semi-unitary (orthonormality defect {defect:.3e})")]
    NotSemiUnitary { defect: f64 },

    /// Distinct poles are required for the Vandermonde symbol solve.
    #[error("duplicate poles at positions {0} and {1}")]
    DuplicatePoles(usize, usize),

    /// Scenario parameters violate a structural constraint.
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    /// The SVD driver failed to converge.
    #[error("singular value decomposition did not converge")]
    SvdFailed,

    /// Text-format parsing failed.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
