use fib_core::AnyonCharge;
use fusion_basis::{enumerate_basis, FusionBasis, FusionTree};
use serde::{Deserialize, Serialize};

use crate::{CircuitError, Result};

pub const ANYONS_PER_QUBIT: usize = 4;

/// Four anyons per qubit: |0⟩ when both pairs fuse to vacuum, |1⟩ when both
/// fuse to τ, each qubit overall vacuum. Qubit 1 holds anyons 1–4 and is the
/// most significant bit of a computational index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QubitEncoding {
    pub qubit_count: usize,
    pub computational_indices: Vec<usize>,
}

/// Qubit values of a tree, or `None` if it leaves the computational space.
pub fn qubit_values(tree: &FusionTree) -> Option<Vec<u8>> {
    let t = &tree.internal_charges;
    let q = (t.len() + 1) / ANYONS_PER_QUBIT;
    (0..q)
        .map(|k| {
            // Charge of everything up to and including qubit k must be vacuum;
            // the qubit's first pair is then the prefix of the next two anyons.
            let closed = t[ANYONS_PER_QUBIT * (k + 1) - 2] == AnyonCharge::Vacuum;
            let pair = t[ANYONS_PER_QUBIT * k];
            closed.then_some(pair.index() as u8)
        })
        .collect()
}

pub fn encode_qubits(qubit_count: usize) -> Result<(FusionBasis, QubitEncoding)> {
    if !(1..=3).contains(&qubit_count) {
        return Err(CircuitError::InvalidInput(format!("{qubit_count} qubits; expected 1 to 3")));
    }
    let basis = enumerate_basis(ANYONS_PER_QUBIT * qubit_count, AnyonCharge::Vacuum)?;
    let mut slots = vec![None; 1 << qubit_count];
    for (idx, tree) in basis.trees().iter().enumerate() {
        if let Some(bits) = qubit_values(tree) {
            let label = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
            slots[label] = Some(idx);
        }
    }
    let computational_indices = slots
        .into_iter()
        .map(|s| s.ok_or_else(|| CircuitError::InvalidInput("missing computational state".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok((basis, QubitEncoding { qubit_count, computational_indices }))
}
