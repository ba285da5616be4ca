use thiserror::Error;

/// Errors raised by the library. Classification outcomes (`NotFound`,
/// `Empty`, `DegenerateGamma`, ...) are ordinary return values, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid rational literal {0:?} (expected \"p\" or \"p/q\" with q > 0)")]
    RationalLiteral(String),
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
