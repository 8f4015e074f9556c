use thiserror::Error;

/// Errors shared by every solver path, the exact arithmetic tower and the
/// file reader.
///
/// Pivot indices are 1-based so that `ZeroPivot { index: 2 }` names the same
/// pivot as the conventional μ₂ / ψ₂.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PentaError {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid matrix order {0}: pentadiagonal systems need n >= {1}")]
    InvalidOrder(usize, usize),

    #[error("band `{band}` has a nonzero value in forced-zero slot {index}")]
    InvalidPadding { band: char, index: usize },

    #[error("zero pivot at index {index}")]
    ZeroPivot { index: usize },

    #[error("No solutions: the coefficient matrix is singular")]
    SingularMatrix,

    #[error("division by the zero rational function")]
    DivisionByZeroFunction,

    #[error("rational function has a pole at p = 0")]
    PoleAtZero,

    #[error("polynomial degree {degree} exceeds the limit of {limit}")]
    DegreeOverflow { degree: usize, limit: usize },

    #[error("value {0} is not finite")]
    NonFinite(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, PentaError>;
