use fib_core::AnyonCharge;
use fusion_basis::{representation, BraidWord, Factor, UnitaryMatrix};
use serde::{Deserialize, Serialize};

use crate::cable::{asap_depth, expand, StrandComposition};
use crate::encoding::{encode_qubits, ANYONS_PER_QUBIT};
use crate::profile::{ConventionProfile, StrandNumbering};
use crate::{CircuitError, Result};

/// One macro word woven on a group of anyons.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stage {
    pub label: String,
    /// Printed macro word.
    pub word: BraidWord,
    /// Widths at the moment the forward word starts.
    pub composition: StrandComposition,
    /// Anyon (1-based, top-down) where the first macro-strand begins.
    pub start: usize,
    /// Apply the exact inverse of the forward stage.
    #[serde(default)]
    pub inverse: bool,
    /// 2×2 gate the word approximates on the τ sector; `None` for stages that
    /// are exact by construction.
    #[serde(default)]
    pub ideal: Option<UnitaryMatrix>,
}

impl Stage {
    pub fn new(label: &str, word: BraidWord, widths: &[usize], start: usize) -> Result<Self> {
        Ok(Self {
            label: label.to_string(),
            word,
            composition: StrandComposition::new(widths.to_vec())?,
            start,
            inverse: false,
            ideal: None,
        })
    }

    pub fn approximating(mut self, ideal: UnitaryMatrix) -> Self {
        self.ideal = Some(ideal);
        self
    }

    pub fn inverted(mut self) -> Self {
        self.inverse = !self.inverse;
        self
    }

    /// Forward macro factors in acting order, renumbered per the profile.
    pub fn macro_time_order(&self, profile: &ConventionProfile) -> Vec<Factor> {
        let m = self.composition.strands();
        profile
            .word_reading_order
            .time_order(&self.word)
            .into_iter()
            .map(|f| match profile.strand_numbering {
                StrandNumbering::Mirrored => Factor::new(m - f.generator, f.power),
                StrandNumbering::Direct => f,
            })
            .collect()
    }

    fn forward_crossings(&self, profile: &ConventionProfile) -> Result<Vec<(usize, bool)>> {
        if self.word.max_generator() >= self.composition.strands() {
            return Err(CircuitError::InvalidInput(format!(
                "stage {}: word needs more than {} macro-strands",
                self.label,
                self.composition.strands()
            )));
        }
        expand(&self.macro_time_order(profile), self.start, &self.composition)
    }

    /// Elementary crossings in acting order.
    pub fn crossings(&self, profile: &ConventionProfile) -> Result<Vec<(usize, bool)>> {
        let mut x = self.forward_crossings(profile)?;
        if self.inverse {
            x.reverse();
            for c in &mut x {
                c.1 = !c.1;
            }
        }
        Ok(x)
    }

    pub fn last_anyon(&self) -> usize {
        self.start + self.composition.total() - 1
    }
}

/// Which controls a computational block belongs to and what it should do.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ControlBlock {
    pub label: String,
    pub indices: Vec<usize>,
    pub target: UnitaryMatrix,
    /// Whether the gate acts nontrivially on this block.
    pub active: bool,
}

/// Printed accounting: `length = a·L + b`, likewise depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateAccounting {
    pub two_qubit_gates: usize,
    pub three_anyon_gates: usize,
    pub length: (usize, usize),
    pub depth: (usize, usize),
}

impl GateAccounting {
    pub fn length_at(&self, l: usize) -> usize {
        self.length.0 * l + self.length.1
    }

    pub fn depth_at(&self, l: usize) -> usize {
        self.depth.0 * l + self.depth.1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ControlRole {
    Identity,
    Not,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum GateKind {
    InjectionCu { u: UnitaryMatrix },
    MGate { role: Option<ControlRole>, s: UnitaryMatrix },
    Ccs { s: UnitaryMatrix },
    CcsDecomposition,
    Custom,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateCircuit {
    pub name: String,
    pub qubits: usize,
    pub profile: ConventionProfile,
    pub kind: GateKind,
    pub stages: Vec<Stage>,
    /// Exact matrix on the computational subspace.
    pub reference: UnitaryMatrix,
    /// Equally acceptable references, e.g. with the controlled gate negated.
    #[serde(default)]
    pub alternates: Vec<UnitaryMatrix>,
    #[serde(default)]
    pub blocks: Vec<ControlBlock>,
    #[serde(default)]
    pub accounting: Option<GateAccounting>,
}

impl GateCircuit {
    pub fn anyons(&self) -> usize {
        ANYONS_PER_QUBIT * self.qubits
    }

    pub fn validate(&self) -> Result<()> {
        let dim = 1usize << self.qubits;
        if self.reference.dim() != dim || self.alternates.iter().any(|m| m.dim() != dim) {
            return Err(CircuitError::InvalidInput(format!("{}: reference must be {dim}×{dim}", self.name)));
        }
        for s in &self.stages {
            if s.start == 0 || s.last_anyon() > self.anyons() {
                return Err(CircuitError::InvalidInput(format!(
                    "{}: stage {} spans anyons {}..{} of {}",
                    self.name,
                    s.label,
                    s.start,
                    s.last_anyon(),
                    self.anyons()
                )));
            }
        }
        Ok(())
    }

    pub fn references(&self) -> impl Iterator<Item = &UnitaryMatrix> {
        std::iter::once(&self.reference).chain(&self.alternates)
    }

    pub fn crossings(&self) -> Result<Vec<(usize, bool)>> {
        let mut out = Vec::new();
        for s in &self.stages {
            out.extend(s.crossings(&self.profile)?);
        }
        Ok(out)
    }

    pub fn elementary_length(&self) -> Result<usize> {
        Ok(self.crossings()?.len())
    }

    pub fn elementary_depth(&self) -> Result<usize> {
        Ok(asap_depth(&self.crossings()?))
    }

    /// Stages of `other` appended after those of `self`, acting later.
    pub fn then(&self, other: &GateCircuit, name: &str, reference: UnitaryMatrix) -> Result<GateCircuit> {
        if self.qubits != other.qubits || self.profile != other.profile {
            return Err(CircuitError::InvalidInput("circuits differ in size or profile".into()));
        }
        let mut stages = self.stages.clone();
        stages.extend(other.stages.iter().cloned());
        Ok(GateCircuit {
            name: name.to_string(),
            qubits: self.qubits,
            profile: self.profile,
            kind: GateKind::Custom,
            stages,
            reference,
            alternates: Vec::new(),
            blocks: Vec::new(),
            accounting: None,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("circuit serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let c: GateCircuit =
            serde_json::from_str(s).map_err(|e| CircuitError::InvalidInput(format!("circuit: {e}")))?;
        c.validate()?;
        Ok(c)
    }
}

#[derive(Debug, Clone)]
pub struct Evaluation {
    pub full: UnitaryMatrix,
    pub block: UnitaryMatrix,
    pub computational: Vec<usize>,
}

pub(crate) fn evaluation(qubits: usize, full: UnitaryMatrix) -> Result<Evaluation> {
    let (_, enc) = encode_qubits(qubits)?;
    let block = full.submatrix(&enc.computational_indices);
    Ok(Evaluation { full, block, computational: enc.computational_indices })
}

/// Multiply out every stage on the ambient vacuum-sector basis.
pub fn evaluate_circuit(circuit: &GateCircuit) -> Result<Evaluation> {
    circuit.validate()?;
    let rep = representation(circuit.anyons(), AnyonCharge::Vacuum, circuit.profile.handedness)?;
    let full = rep.crossings_matrix(&circuit.crossings()?)?;
    evaluation(circuit.qubits, full)
}

/// Matrix of a single stage on the circuit's ambient basis.
pub fn stage_matrix(stage: &Stage, qubits: usize, profile: &ConventionProfile) -> Result<UnitaryMatrix> {
    let rep = representation(ANYONS_PER_QUBIT * qubits, AnyonCharge::Vacuum, profile.handedness)?;
    Ok(rep.crossings_matrix(&stage.crossings(profile)?)?)
}
