use thiserror::Error;

/// Errors raised by constructors and structural preconditions.
///
/// Axiom verification does not error; it returns an itemized
/// [`CheckReport`](crate::report::CheckReport) instead. `Error` is reserved
/// for inputs that are structurally unusable (dimension mismatches, invalid
/// tables, non-Hermitian Gram matrices and the like).
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspace is not contained in the ambient space: {0}")]
    NotContained(String),
    #[error("matrix is not conjugate-symmetric: entry ({0},{1})")]
    NotHermitian(usize, usize),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("middle algebras of the balanced tensor differ: {0}")]
    MiddleMismatch(String),
    #[error("source and target images do not commute: witness ({0}, {1})")]
    NonCommutingImages(String, String),
    #[error("map does not descend to the quotient: witness relation {0}")]
    DoesNotDescend(String),
    #[error("action is not functorial: witness arrows ({0}, {1})")]
    NotFunctorial(String, String),
    #[error("not a module algebra: {0}")]
    NotModuleAlgebra(String),
    #[error("antipode of the acting Hopf algebra does not square to the identity")]
    AntipodeNotInvolutive,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
