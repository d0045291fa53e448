use std::fmt;

use fib_core::Handedness;
use fusion_basis::ReadingOrder;
use serde::{Deserialize, Serialize};

use crate::{CircuitError, Result};

/// How printed macro-strand indices map onto the top-down anyon numbering
/// of the circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum StrandNumbering {
    /// Printed σ_i acts on macro-strands `m − i, m − i + 1` (counted from the top).
    #[default]
    Mirrored,
    Direct,
}

/// What the two strands beside the width-4 weft are during the I and S
/// stages of M(R,S).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum LowerStrands {
    #[default]
    Single,
    Paired,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ConventionProfile {
    pub handedness: Handedness,
    pub word_reading_order: ReadingOrder,
    pub strand_numbering: StrandNumbering,
    pub lower_strands: LowerStrands,
}

impl ConventionProfile {
    /// The calibrated profile every acceptance run uses.
    pub fn pinned() -> Self {
        Self::default()
    }

    pub fn with(handedness: Handedness, order: ReadingOrder) -> Self {
        Self { handedness, word_reading_order: order, ..Self::pinned() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| CircuitError::InvalidInput(format!("profile: {e}")))
    }
}

impl fmt::Display for ConventionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = match self.handedness {
            Handedness::Right => "right",
            Handedness::Left => "left",
        };
        write!(f, "{h}/{}/{:?}/{:?}", self.word_reading_order, self.strand_numbering, self.lower_strands)
    }
}
