#![allow(dead_code)]

use braid_circuits::*;
use su2_compile::{distance, gates, leakage, BraidWord};

pub const R_IDENTITY: &str = "s1^-1 s1^-2 s2^2 s1^4 s2^-2 s1^-4 s2^-2 s1^2 s2^2 s1^4 s2^4 s1^2 s2^-4 s1^-2 s2^2 s1^-2 s2^-2 s1^2 s2^-2 s2^-1";
pub const INJECT: &str = "s1^1 s1^2 s2^2 s1^4 s2^4 s1^4 s2^2 s1^4 s2^2 s1^2 s2^-2 s1^2 s2^-2 s1^2 s2^2 s1^2 s2^-2 s1^2 s2^-2 s1^2 s2^-1";
pub const NOT: &str = "s2^1 s2^4 s1^-2 s2^-2 s1^-2 s2^-4 s1^-2 s2^2 s1^2 s2^-4 s1^2 s2^4 s1^-2 s2^4 s1^-2 s2^-4 s1^-2 s2^-2 s2^-1";
pub const R_NOT: &str = "s1^-1 s2^2 s1^-4 s2^2 s1^-2 s2^2 s1^-2 s2^4 s1^-2 s2^-2 s1^-2 s2^4 s1^-2 s2^-2 s1^2 s2^2 s1^-2 s2^-2 s1^-2 s2^-2 s1^-2 s2^1";
pub const R_NOT_CCS: &str = "s1^1 s1^2 s2^2 s1^-2 s2^2 s1^-2 s2^-2 s1^-2 s2^4 s1^-2 s2^-2 s1^-2 s2^2 s1^-2 s2^2 s1^-2 s2^2 s1^2 s2^2 s1^-2 s2^-2 s1^2 s2^-2 s2^1";
pub const INJECT_CCS: &str = "s1^1 s1^2 s2^2 s1^2 s2^2 s1^-2 s2^2 s1^4 s2^2 s1^-2 s2^2 s1^2 s2^-2 s1^4 s2^4 s1^2 s2^-2 s1^2 s2^4 s1^2 s2^-1";
pub const INJECT_CNOT: &str = "s1^-1 s1^-2 s2^2 s1^4 s2^2 s1^4 s2^-2 s1^2 s2^-2 s1^2 s2^4 s1^2 s2^-2 s1^2 s2^-4 s1^-2 s2^-4 s1^-2 s2^-2 s2^-1";
pub const SQRT_NOT: &str = "s2^-1 s1^2 s2^4 s1^-2 s2^-4 s1^2 s2^-2 s1^2 s2^4 s1^-2 s2^2 s1^2 s2^4 s1^2 s2^-2 s1^4 s2^4 s1^2 s2^-1";

pub fn w(s: &str) -> BraidWord {
    s.parse().unwrap()
}

pub fn pinned() -> ConventionProfile {
    ConventionProfile::pinned()
}

pub fn m_i_ix() -> GateCircuit {
    build_m_gate(&pinned(), &w(R_IDENTITY), &w(INJECT), &w(NOT), &gates::i_x(), None).unwrap()
}

pub fn m_ix_ix() -> GateCircuit {
    build_m_gate(&pinned(), &w(R_NOT), &w(INJECT), &w(NOT), &gates::i_x(), None).unwrap()
}

pub fn ccs() -> GateCircuit {
    let m = build_m_gate(&pinned(), &w(R_NOT_CCS), &w(INJECT_CCS), &w(NOT), &gates::i_x(), None).unwrap();
    build_ccs(&m, &w(NOT), &w(NOT)).unwrap()
}

pub fn decomposition() -> GateCircuit {
    let words = DecompositionWords {
        inject_cnot: w(INJECT_CNOT),
        inject_csqrt: w(INJECT),
        sqrt_not: w(SQRT_NOT),
        not: w(NOT),
    };
    build_ccs_decomposition(&pinned(), &words).unwrap()
}

pub fn cu() -> GateCircuit {
    build_injection_cu(&pinned(), &w(INJECT_CNOT), &w(NOT), &gates::i_x()).unwrap()
}

pub fn overall(c: &GateCircuit, e: &Evaluation) -> f64 {
    c.references().map(|r| distance(&e.block, r).unwrap()).fold(f64::INFINITY, f64::min)
}

pub fn leak(e: &Evaluation) -> f64 {
    leakage(&e.full, &e.computational).unwrap()
}

pub fn active_block_errors(c: &GateCircuit, e: &Evaluation) -> Vec<f64> {
    c.blocks
        .iter()
        .filter(|b| b.active)
        .map(|b| distance(&e.block.submatrix(&b.indices), &b.target).unwrap())
        .collect()
}

pub fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y
}
