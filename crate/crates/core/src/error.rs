use thiserror::Error;

/// Errors produced by the solver pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid case: {0}")]
    InvalidCase(String),

    /// Expression text could not be parsed. `position` is a byte offset into the input.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("numeric failure: {0}")]
    NumericFailure(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
