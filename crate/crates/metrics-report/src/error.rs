use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReportError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("calibration failed: {reason}\n{table}")]
    Calibration { reason: String, table: String },
    #[error(transparent)]
    Circuit(#[from] braid_circuits::CircuitError),
    #[error(transparent)]
    Compile(#[from] su2_compile::CompileError),
}
