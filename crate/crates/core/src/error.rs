use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("points of mixed dimension: expected {expected}, found {found}")]
    MixedDimensions { expected: usize, found: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("operation requires a nonempty point set")]
    EmptyInput,
    #[error("point is not a member of the set")]
    NotMember,
    #[error("points are affinely dependent")]
    AffinelyDependent,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("face index {index} out of range for dimension {dim}")]
    InvalidFace { index: usize, dim: usize },
    #[error("trace was recorded without {0}")]
    NotInstrumented(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
