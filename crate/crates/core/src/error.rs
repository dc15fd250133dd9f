use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into three classes that the command-line front end maps to
/// distinct exit codes: malformed input, violated preconditions, and internal
/// invariant breaches (which always indicate a bug).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),

    #[error("element does not belong to the space: {0}")]
    SpaceMismatch(String),
    #[error("invalid space description: {0}")]
    InvalidSpace(String),
    #[error("expected a positive element: {0}")]
    NotPositive(String),
    #[error("operation requires an AM-space model, got {0}")]
    NotAmFamily(String),
    #[error("weight is not admissible: {0}")]
    InadmissibleWeight(String),
    #[error("space is not an AM-algebra")]
    NotAmAlgebra,
    #[error("operator is not an algebra homomorphism")]
    NotAlgebraHom,
    #[error("image leaves the space: {0}")]
    LeavesSpace(String),
    #[error("operator shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid band selection: {0}")]
    InvalidBand(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant breached: {0}")]
    InvariantBreach(String),
}

impl Error {
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Schema(_))
    }

    pub fn is_invariant_breach(&self) -> bool {
        matches!(self, Error::InvariantBreach(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
