use fib_core::C64;
use fusion_basis::{BraidWord, UnitaryMatrix};
use su2_compile::search::endpoint_of;
use su2_compile::{gates, word_error, Endpoint};

use crate::circuit::{ControlBlock, ControlRole, GateCircuit, GateKind, GateAccounting, Stage};
use crate::profile::{ConventionProfile, LowerStrands, StrandNumbering};
use crate::reference;
use crate::{CircuitError, Result};

/// A control word counts as I or NOT when its standalone error is below this.
pub const ROLE_TOL: f64 = 0.05;

pub const CI_ACCOUNTING: GateAccounting =
    GateAccounting { two_qubit_gates: 4, three_anyon_gates: 3, length: (25, 0), depth: (22, 0) };
pub const DECOMPOSITION_ACCOUNTING: GateAccounting =
    GateAccounting { two_qubit_gates: 7, three_anyon_gates: 3, length: (30, 32), depth: (30, 32) };

fn require(word: &BraidWord, expected: Endpoint, role: &str) -> Result<()> {
    if word.max_generator() > 2 {
        return Err(CircuitError::InvalidInput(format!("{role} word must act on three strands")));
    }
    let got = endpoint_of(word);
    if got != expected {
        return Err(CircuitError::InvalidInput(format!("{role} word has {got:?} endpoints, expected {expected:?}")));
    }
    Ok(())
}

fn neg(m: &UnitaryMatrix) -> UnitaryMatrix {
    m.scale(C64::new(-1.0, 0.0))
}

/// Blocks of a three-qubit gate keyed by the two control bits.
fn control_blocks(s: &UnitaryMatrix, active: &[usize]) -> Vec<ControlBlock> {
    (0..4)
        .map(|c| {
            let on = active.contains(&c);
            ControlBlock {
                label: format!("{:02b}", c),
                indices: vec![2 * c, 2 * c + 1],
                target: if on { s.clone() } else { gates::identity() },
                active: on,
            }
        })
        .collect()
}

/// Single-qubit word on qubit `q`; the weave uses three of its four anyons.
pub fn single_qubit_stage(profile: &ConventionProfile, label: &str, word: &BraidWord, q: usize, ideal: UnitaryMatrix) -> Result<Stage> {
    let offset = match profile.strand_numbering {
        StrandNumbering::Mirrored => 2,
        StrandNumbering::Direct => 1,
    };
    Ok(Stage::new(label, word.clone(), &[1, 1, 1], 4 * (q - 1) + offset)?.approximating(ideal))
}

/// Exchange of qubits 1 and 2 as one crossing of two four-anyon cables.
pub fn swap_stage() -> Stage {
    let w = BraidWord::from_pairs(&[(1, 1)]).expect("static word");
    Stage::new("SWAP", w, &[4, 4], 1).expect("static composition")
}

/// Inject the control pair starting at anyon `s` into the next qubit, weave
/// the target word, and take the pair back out.
fn cu_stages(tag: &str, inject: &BraidWord, target: &BraidWord, u: &UnitaryMatrix, target_inverse: bool, s: usize) -> Result<Vec<Stage>> {
    let inj = Stage::new(&format!("{tag}.inject"), inject.clone(), &[2, 1, 1], s)?.approximating(gates::identity());
    let mut tgt = Stage::new(&format!("{tag}.target"), target.clone(), &[2, 1, 1], s + 2)?.approximating(u.clone());
    if target_inverse {
        tgt = tgt.inverted();
    }
    Ok(vec![inj.clone(), tgt, inj.inverted()])
}

/// Controlled-`u` from qubit 1 to qubit 2 on eight anyons.
pub fn build_injection_cu(profile: &ConventionProfile, inject: &BraidWord, target: &BraidWord, u: &UnitaryMatrix) -> Result<GateCircuit> {
    require(inject, Endpoint::TopToBottom, "inject")?;
    require(target, Endpoint::SameStrand, "target")?;
    let reference = reference::controlled(2, &[1], 2, u)?;
    let alternates = vec![reference::controlled(2, &[1], 2, &neg(u))?];
    let blocks = vec![
        ControlBlock { label: "0".into(), indices: vec![0, 1], target: gates::identity(), active: false },
        ControlBlock { label: "1".into(), indices: vec![2, 3], target: u.clone(), active: true },
    ];
    Ok(GateCircuit {
        name: "CU".into(),
        qubits: 2,
        profile: *profile,
        kind: GateKind::InjectionCu { u: u.clone() },
        stages: cu_stages("CU", inject, target, u, false, 3)?,
        reference,
        alternates,
        blocks,
        accounting: None,
    })
}

/// Whether a control word approximates I or NOT (as ±iX).
pub fn detect_role(profile: &ConventionProfile, r: &BraidWord) -> Result<Option<ControlRole>> {
    let (h, o) = (profile.handedness, profile.word_reading_order);
    let to_i = word_error(r, &gates::identity(), h, o)?;
    let to_x = word_error(r, &gates::i_x(), h, o)?;
    Ok(if to_i <= to_x && to_i < ROLE_TOL {
        Some(ControlRole::Identity)
    } else if to_x < ROLE_TOL {
        Some(ControlRole::Not)
    } else {
        None
    })
}

/// Controlled-injection gate: R, I, S, I⁻¹, R⁻¹ on twelve anyons.
///
/// The role of `r` picks the reference. A word that approximates neither I
/// nor NOT needs `reference`.
pub fn build_m_gate(
    profile: &ConventionProfile,
    r: &BraidWord,
    i: &BraidWord,
    s: &BraidWord,
    s_target: &UnitaryMatrix,
    reference: Option<UnitaryMatrix>,
) -> Result<GateCircuit> {
    require(r, Endpoint::TopToBottom, "R")?;
    require(i, Endpoint::TopToBottom, "I")?;
    require(s, Endpoint::SameStrand, "S")?;
    let role = detect_role(profile, r)?;
    let (reference, alternates, blocks, r_ideal) = match (role, reference) {
        (_, Some(m)) => {
            if m.dim() != 8 {
                return Err(CircuitError::InvalidInput("M(R,S) reference must be 8×8".into()));
            }
            (m, Vec::new(), Vec::new(), None)
        }
        (Some(ControlRole::Identity), None) => (
            reference::m_identity(s_target),
            vec![reference::m_identity(&neg(s_target))],
            control_blocks(s_target, &[0b01, 0b10]),
            Some(gates::identity()),
        ),
        (Some(ControlRole::Not), None) => (
            reference::m_not(s_target),
            vec![reference::m_not(&neg(s_target))],
            control_blocks(s_target, &[0b01, 0b10, 0b11]),
            Some(gates::i_x()),
        ),
        (None, None) => {
            return Err(CircuitError::InvalidInput(
                "R word approximates neither I nor NOT; supply a reference matrix".into(),
            ))
        }
    };
    let mut rs = Stage::new("R", r.clone(), &[2, 2, 2], 3)?;
    if let Some(ideal) = r_ideal {
        rs = rs.approximating(ideal);
    }
    let (is, ss) = match profile.lower_strands {
        LowerStrands::Single => (
            Stage::new("I", i.clone(), &[4, 1, 1], 5)?,
            Stage::new("S", s.clone(), &[4, 1, 1], 7)?,
        ),
        LowerStrands::Paired => (
            Stage::new("I", i.clone(), &[4, 2, 2], 5)?,
            Stage::new("S", s.map_generators(|g| 3 - g), &[2, 2, 4], 5)?,
        ),
    };
    let is = is.approximating(gates::identity());
    let ss = ss.approximating(s_target.clone());
    let stages = vec![rs.clone(), is.clone(), ss, is.inverted(), rs.inverted()];
    Ok(GateCircuit {
        name: match role {
            Some(ControlRole::Identity) => "M(I,S)".into(),
            Some(ControlRole::Not) => "M(iX,S)".into(),
            None => "M(R,S)".into(),
        },
        qubits: 3,
        profile: *profile,
        kind: GateKind::MGate { role, s: s_target.clone() },
        stages,
        reference,
        alternates,
        blocks,
        accounting: None,
    })
}

/// Doubly controlled `S` from an `M(iX, S†)` circuit: NOT on both controls
/// before and after it, and `S` on the target beforehand. `s_word` is the
/// word for `S†`, applied inverted.
pub fn build_ccs(m: &GateCircuit, not_word: &BraidWord, s_word: &BraidWord) -> Result<GateCircuit> {
    let GateKind::MGate { role: Some(ControlRole::Not), s: s_dagger } = &m.kind else {
        return Err(CircuitError::InvalidInput("CCS needs an M(iX,S†) circuit".into()));
    };
    require(not_word, Endpoint::SameStrand, "NOT")?;
    require(s_word, Endpoint::SameStrand, "S")?;
    let p = &m.profile;
    let s = s_dagger.adjoint();
    let ix = gates::i_x();
    let nots = |inv: bool| -> Result<Vec<Stage>> {
        (1..=2)
            .map(|q| {
                let st = single_qubit_stage(p, &format!("NOT{q}"), not_word, q, ix.clone())?;
                Ok(if inv { st.inverted() } else { st })
            })
            .collect()
    };
    let mut stages = nots(false)?;
    stages.push(single_qubit_stage(p, "S3", s_word, 3, s_dagger.clone())?.inverted());
    stages.extend(m.stages.iter().cloned());
    stages.extend(nots(true)?);
    Ok(GateCircuit {
        name: "CCS".into(),
        qubits: 3,
        profile: *p,
        kind: GateKind::Ccs { s: s.clone() },
        stages,
        reference: reference::ccs(&s),
        alternates: vec![reference::ccs(&neg(&s))],
        blocks: control_blocks(&s, &[0b11]),
        accounting: Some(CI_ACCOUNTING),
    })
}

/// Words for the five-gate baseline.
#[derive(Debug, Clone)]
pub struct DecompositionWords {
    pub inject_cnot: BraidWord,
    pub inject_csqrt: BraidWord,
    pub sqrt_not: BraidWord,
    pub not: BraidWord,
}

/// Doubly controlled iX from five injection gates, routing the 1→3 gate
/// through a SWAP of qubits 1 and 2.
pub fn build_ccs_decomposition(profile: &ConventionProfile, w: &DecompositionWords) -> Result<GateCircuit> {
    require(&w.inject_cnot, Endpoint::TopToBottom, "CNOT injection")?;
    require(&w.inject_csqrt, Endpoint::TopToBottom, "C√NOT injection")?;
    require(&w.sqrt_not, Endpoint::SameStrand, "√NOT")?;
    require(&w.not, Endpoint::SameStrand, "NOT")?;
    let (v, ix) = (gates::sqrt_i_x(), gates::i_x());
    let mut stages = Vec::new();
    stages.extend(cu_stages("CV23", &w.inject_csqrt, &w.sqrt_not, &v, false, 7)?);
    stages.extend(cu_stages("CU12", &w.inject_cnot, &w.not, &ix, false, 3)?);
    stages.extend(cu_stages("CV23†", &w.inject_csqrt, &w.sqrt_not, &v, true, 7)?);
    stages.extend(cu_stages("CU12†", &w.inject_cnot, &w.not, &ix, true, 3)?);
    stages.push(swap_stage());
    stages.extend(cu_stages("CV13", &w.inject_csqrt, &w.sqrt_not, &v, false, 7)?);
    stages.push(swap_stage().inverted());
    Ok(GateCircuit {
        name: "CCS decomposition".into(),
        qubits: 3,
        profile: *profile,
        kind: GateKind::CcsDecomposition,
        stages,
        reference: reference::ccs(&neg(&ix)),
        alternates: vec![reference::ccs(&ix)],
        blocks: control_blocks(&ix, &[0b11]),
        accounting: Some(DECOMPOSITION_ACCOUNTING),
    })
}
