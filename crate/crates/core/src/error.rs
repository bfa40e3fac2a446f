use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("certification failed: {reason}")]
    CertificationFailed {
        reason: String,
        /// Generator lists of the disagreeing trial results, rendered as text.
        candidates: Vec<String>,
    },

    #[error("complement duality violated: {0}")]
    DualityViolation(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn size(msg: impl Into<String>) -> Self {
        Error::SizeLimit(msg.into())
    }

    /// Exit status used by the command line frontend.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) => 2,
            Error::CertificationFailed { .. } | Error::DualityViolation(_) => 3,
            Error::SizeLimit(_) => 4,
            Error::BudgetExhausted(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
