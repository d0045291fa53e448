use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CircuitError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("stand-in fit failed: {0}")]
    StandIn(String),
    #[error(transparent)]
    Compile(#[from] su2_compile::CompileError),
    #[error(transparent)]
    Basis(#[from] fusion_basis::BasisError),
}
