use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CompileError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("infeasible search: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Basis(#[from] fusion_basis::BasisError),
}
