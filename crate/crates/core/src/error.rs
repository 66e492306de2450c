use thiserror::Error;

/// Errors raised by the algebra routines and the command-line front end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("invalid rope specification: {0}")]
    SpecInvalid(String),
    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("generator {index} is not homogeneous: {poly}")]
    Homogeneity { index: usize, poly: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("table shape error: {0}")]
    Shape(String),
    #[error("{0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
