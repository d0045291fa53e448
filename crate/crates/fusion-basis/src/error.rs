use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BasisError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("malformed braid word: {0}")]
    Parse(String),
    #[error("matrix format: {0}")]
    Format(String),
}
