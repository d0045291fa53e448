//! Published three-anyon words and the composite gates built from them.

use braid_circuits::{
    build_ccs, build_ccs_decomposition, build_m_gate, ConventionProfile, DecompositionWords, GateCircuit,
};
use fusion_basis::{BraidWord, UnitaryMatrix};
use su2_compile::gates;

use crate::Result;

pub const R_IDENTITY: &str = "s1^-1 s1^-2 s2^2 s1^4 s2^-2 s1^-4 s2^-2 s1^2 s2^2 s1^4 s2^4 s1^2 s2^-4 s1^-2 s2^2 s1^-2 s2^-2 s1^2 s2^-2 s2^-1";
pub const INJECT: &str = "s1^1 s1^2 s2^2 s1^4 s2^4 s1^4 s2^2 s1^4 s2^2 s1^2 s2^-2 s1^2 s2^-2 s1^2 s2^2 s1^2 s2^-2 s1^2 s2^-2 s1^2 s2^-1";
pub const NOT: &str = "s2^1 s2^4 s1^-2 s2^-2 s1^-2 s2^-4 s1^-2 s2^2 s1^2 s2^-4 s1^2 s2^4 s1^-2 s2^4 s1^-2 s2^-4 s1^-2 s2^-2 s2^-1";
pub const R_NOT: &str = "s1^-1 s2^2 s1^-4 s2^2 s1^-2 s2^2 s1^-2 s2^4 s1^-2 s2^-2 s1^-2 s2^4 s1^-2 s2^-2 s1^2 s2^2 s1^-2 s2^-2 s1^-2 s2^-2 s1^-2 s2^1";
pub const R_NOT_CCS: &str = "s1^1 s1^2 s2^2 s1^-2 s2^2 s1^-2 s2^-2 s1^-2 s2^4 s1^-2 s2^-2 s1^-2 s2^2 s1^-2 s2^2 s1^-2 s2^2 s1^2 s2^2 s1^-2 s2^-2 s1^2 s2^-2 s2^1";
pub const INJECT_CCS: &str = "s1^1 s1^2 s2^2 s1^2 s2^2 s1^-2 s2^2 s1^4 s2^2 s1^-2 s2^2 s1^2 s2^-2 s1^4 s2^4 s1^2 s2^-2 s1^2 s2^4 s1^2 s2^-1";
pub const INJECT_CNOT: &str = "s1^-1 s1^-2 s2^2 s1^4 s2^2 s1^4 s2^-2 s1^2 s2^-2 s1^2 s2^4 s1^2 s2^-2 s1^2 s2^-4 s1^-2 s2^-4 s1^-2 s2^-2 s2^-1";
pub const SQRT_NOT: &str = "s2^-1 s1^2 s2^4 s1^-2 s2^-4 s1^2 s2^-2 s1^2 s2^4 s1^-2 s2^2 s1^2 s2^4 s1^2 s2^-2 s1^4 s2^4 s1^2 s2^-1";

/// Printed standalone errors per target.
pub const ERROR_IDENTITY: f64 = 1.51e-3;
pub const ERROR_NOT: f64 = 8.55e-4;
pub const ERROR_SQRT_NOT: f64 = 1.24e-3;

/// One published word, grouped by the gate it was found for.
#[derive(Debug, Clone)]
pub struct WordFixture {
    pub set: &'static str,
    pub role: &'static str,
    pub word: &'static str,
    pub target: &'static str,
    pub printed_error: f64,
}

impl WordFixture {
    pub fn word(&self) -> BraidWord {
        self.word.parse().expect("fixture words parse")
    }

    pub fn target_matrix(&self) -> UnitaryMatrix {
        gates::by_name(self.target).expect("fixture targets are known")
    }
}

const fn row(set: &'static str, role: &'static str, word: &'static str, target: &'static str, printed_error: f64) -> WordFixture {
    WordFixture { set, role, word, target, printed_error }
}

pub fn word_fixtures() -> Vec<WordFixture> {
    vec![
        row("M(I,iX)", "R", R_IDENTITY, "I", ERROR_IDENTITY),
        row("M(I,iX)", "I", INJECT, "I", ERROR_IDENTITY),
        row("M(I,iX)", "S", NOT, "iX", ERROR_NOT),
        row("M(iX,iX)", "R", R_NOT, "iX", ERROR_NOT),
        row("M(iX,iX)", "I", INJECT, "I", ERROR_IDENTITY),
        row("M(iX,iX)", "S", NOT, "iX", ERROR_NOT),
        row("iToffoli", "R", R_NOT_CCS, "iX", ERROR_NOT),
        row("iToffoli", "I", INJECT_CCS, "I", ERROR_IDENTITY),
        row("iToffoli", "S", NOT, "iX", ERROR_NOT),
        row("iToffoli", "NOT", NOT, "iX", ERROR_NOT),
        row("decomposition", "CNOT injection", INJECT_CNOT, "I", ERROR_IDENTITY),
        row("decomposition", "C-sqrtNOT injection", INJECT, "I", ERROR_IDENTITY),
        row("decomposition", "sqrtNOT", SQRT_NOT, "sqrtNOT", ERROR_SQRT_NOT),
        row("decomposition", "NOT", NOT, "iX", ERROR_NOT),
    ]
}

/// Printed composite values.
#[derive(Debug, Clone, Copy)]
pub struct CompositeFixture {
    pub name: &'static str,
    pub overall: f64,
    pub leakage: f64,
    pub target_blocks: &'static [f64],
}

pub const M_IDENTITY_IX: CompositeFixture =
    CompositeFixture { name: "M(I,iX)", overall: 6.64e-4, leakage: 3.26e-6, target_blocks: &[] };
pub const M_NOT_IX: CompositeFixture =
    CompositeFixture { name: "M(iX,iX)", overall: 6.64e-4, leakage: 3.99e-6, target_blocks: &[6.644e-4, 6.644e-4, 6.637e-4] };
pub const ITOFFOLI_CI: CompositeFixture =
    CompositeFixture { name: "iToffoli (controlled injection)", overall: 2.07e-3, leakage: 1.62e-6, target_blocks: &[8.54e-4] };
pub const ITOFFOLI_DECOMPOSITION: CompositeFixture =
    CompositeFixture { name: "-iToffoli (decomposition)", overall: 1.90e-3, leakage: 3.96e-6, target_blocks: &[] };

fn w(s: &str) -> BraidWord {
    s.parse().expect("fixture words parse")
}

pub fn m_identity_ix(profile: &ConventionProfile) -> Result<GateCircuit> {
    Ok(build_m_gate(profile, &w(R_IDENTITY), &w(INJECT), &w(NOT), &gates::i_x(), None)?)
}

pub fn m_not_ix(profile: &ConventionProfile) -> Result<GateCircuit> {
    Ok(build_m_gate(profile, &w(R_NOT), &w(INJECT), &w(NOT), &gates::i_x(), None)?)
}

/// Words for the controlled-injection iToffoli, by role.
#[derive(Debug, Clone)]
pub struct CcsWords {
    pub r: BraidWord,
    pub i: BraidWord,
    pub s: BraidWord,
    pub not: BraidWord,
}

impl CcsWords {
    pub fn published() -> Self {
        Self { r: w(R_NOT_CCS), i: w(INJECT_CCS), s: w(NOT), not: w(NOT) }
    }
}

pub fn itoffoli_from(profile: &ConventionProfile, words: &CcsWords) -> Result<GateCircuit> {
    let m = build_m_gate(profile, &words.r, &words.i, &words.s, &gates::i_x(), None)?;
    Ok(build_ccs(&m, &words.not, &words.s)?)
}

pub fn itoffoli(profile: &ConventionProfile) -> Result<GateCircuit> {
    itoffoli_from(profile, &CcsWords::published())
}

pub fn decomposition_words() -> DecompositionWords {
    DecompositionWords { inject_cnot: w(INJECT_CNOT), inject_csqrt: w(INJECT), sqrt_not: w(SQRT_NOT), not: w(NOT) }
}

pub fn itoffoli_decomposition(profile: &ConventionProfile) -> Result<GateCircuit> {
    Ok(build_ccs_decomposition(profile, &decomposition_words())?)
}
