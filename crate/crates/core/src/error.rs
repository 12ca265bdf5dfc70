use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate form: {0}")]
    Degenerate(String),
    #[error("degenerate index: {0}")]
    DegenerateIndex(String),
    #[error("logarithmic case: {0}")]
    Logarithmic(String),
    #[error("out of implemented range: {0}")]
    OutOfRange(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
