use std::collections::BTreeMap;

use braid_circuits::{evaluate_circuit, ConventionProfile, Evaluation, GateCircuit, GateAccounting};
use serde::{Deserialize, Serialize};
use su2_compile::{distance, leakage};

use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateScore {
    pub name: String,
    pub profile: ConventionProfile,
    pub overall_error: f64,
    /// Distance of each active control block to its target, by control label.
    pub target_block_errors: BTreeMap<String, f64>,
    pub leakage: f64,
    pub elementary_length: usize,
    pub elementary_depth: usize,
    /// Length of the three-anyon words the circuit is built from.
    pub word_length: usize,
    pub formula_length: Option<usize>,
    pub formula_depth: Option<usize>,
    pub accounting: Option<GateAccounting>,
}

impl GateScore {
    /// Largest active-block error, the "error in target".
    pub fn target_error(&self) -> f64 {
        self.target_block_errors.values().copied().fold(0.0, f64::max)
    }
}

/// Smallest distance to any acceptable reference.
pub fn overall_error(circuit: &GateCircuit, e: &Evaluation) -> Result<f64> {
    let mut best = f64::INFINITY;
    for r in circuit.references() {
        best = best.min(distance(&e.block, r)?);
    }
    Ok(best)
}

pub fn score_evaluation(circuit: &GateCircuit, e: &Evaluation) -> Result<GateScore> {
    let mut target_block_errors = BTreeMap::new();
    for b in circuit.blocks.iter().filter(|b| b.active) {
        target_block_errors.insert(b.label.clone(), distance(&e.block.submatrix(&b.indices), &b.target)?);
    }
    let word_length = circuit
        .stages
        .iter()
        .filter(|s| s.ideal.is_some())
        .map(|s| s.word.length())
        .max()
        .unwrap_or(0);
    Ok(GateScore {
        name: circuit.name.clone(),
        profile: circuit.profile,
        overall_error: overall_error(circuit, e)?,
        target_block_errors,
        leakage: leakage(&e.full, &e.computational)?,
        elementary_length: circuit.elementary_length()?,
        elementary_depth: circuit.elementary_depth()?,
        word_length,
        formula_length: circuit.accounting.map(|a| a.length_at(word_length)),
        formula_depth: circuit.accounting.map(|a| a.depth_at(word_length)),
        accounting: circuit.accounting,
    })
}

pub fn score_gate(circuit: &GateCircuit) -> Result<GateScore> {
    score_evaluation(circuit, &evaluate_circuit(circuit)?)
}
