use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("syntax error at position {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("missing assignment for variable `{0}`")]
    MissingAssignment(String),
    #[error("minor size exceeds matrix dimensions")]
    SizeTooLarge,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("ideal is not homogeneous")]
    NonHomogeneous,
    #[error("resource budget exceeded: {0}")]
    ResourceLimit(String),
    #[error("matrix is rank deficient")]
    RankDeficient,
    #[error("Plücker index sizes are inconsistent")]
    IndexSizeMismatch,
    #[error("subspace has the wrong codimension")]
    WrongCodimension,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("partition does not fit inside the {0}x{1} box")]
    BoxViolation(usize, usize),
    #[error("degenerate random sample persisted after {0} retries")]
    DegenerateSample(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
