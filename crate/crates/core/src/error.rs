use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("illegal group descriptor: {0}")]
    IllegalGroup(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("ambiguous: {0}")]
    Ambiguous(String),
    #[error("enumeration budget exceeded: need {needed}, budget {budget}")]
    Budget { needed: u64, budget: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Internal(format!("serialization: {e}"))
    }
}
