use thiserror::Error;

/// Errors raised by constructors, verifiers and searches.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("design must be nonempty")]
    EmptyDesign,
    #[error("{what} of size {size} exceeds the limit {limit}")]
    SizeLimit { what: &'static str, size: u128, limit: u128 },
    #[error("budget of {budget} exceeded ({needed} required)")]
    BudgetExceeded { budget: u64, needed: u64 },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("spectrum has a repeated eigenvalue {0}")]
    RepeatedEigenvalue(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
