//! Composite gates woven from three-strand words on groups of Fibonacci
//! anyons: cabling, four-anyon qubits, injection gates and the doubly
//! controlled constructions built from them.

mod builders;
mod cable;
mod circuit;
mod encoding;
mod error;
mod exact;
mod profile;
pub mod reference;

pub use builders::{
    build_ccs, build_ccs_decomposition, build_injection_cu, build_m_gate, detect_role, single_qubit_stage,
    swap_stage, DecompositionWords, CI_ACCOUNTING, DECOMPOSITION_ACCOUNTING, ROLE_TOL,
};
pub use cable::{asap_depth, cable, expand, macro_crossing, StrandComposition};
pub use circuit::{
    evaluate_circuit, stage_matrix, ControlBlock, ControlRole, Evaluation, GateCircuit, GateKind, GateAccounting,
    Stage,
};
pub use encoding::{encode_qubits, qubit_values, QubitEncoding, ANYONS_PER_QUBIT};
pub use error::CircuitError;
pub use exact::{evaluate_exact, stand_in};
pub use profile::{ConventionProfile, LowerStrands, StrandNumbering};

pub type Result<T> = std::result::Result<T, CircuitError>;
