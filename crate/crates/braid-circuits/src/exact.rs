//! Exact stand-ins for woven stages.
//!
//! A stage word `w` approximates a 2×2 gate `T` on three macro-strands. Its
//! stand-in keeps the braid `ρ(w)` but first applies the lift of the small
//! correction `π(w)⁻¹·U`, where `U` is `T` snapped onto the phase structure of
//! `π(w)`. The lift is the linear map `L` with `L(π(p)) = ρ(p)·P` for pure
//! braids `p`, `P` projecting onto the sector in which every macro-strand
//! carries τ. Outside that sector the braid is left untouched.

use fib_core::{model_constants, AnyonCharge, C64};
use fusion_basis::{representation, Factor, Representation, UnitaryMatrix};
use nalgebra::DMatrix;

use crate::cable::{expand, macro_crossing, StrandComposition};
use crate::circuit::{evaluation, stage_matrix, Evaluation, GateCircuit, Stage};
use crate::encoding::ANYONS_PER_QUBIT;
use crate::profile::ConventionProfile;
use crate::{CircuitError, Result};

const FIT_TOL: f64 = 1e-9;

/// Operator on three τ anyons: the 2×2 τ-sector block and the vacuum scalar.
#[derive(Debug, Clone)]
struct MacroOp {
    tau: UnitaryMatrix,
    vac: C64,
}

impl MacroOp {
    fn of(crossings: &[(usize, bool)], profile: &ConventionProfile) -> Result<Self> {
        let h = profile.handedness;
        Ok(Self {
            tau: representation(3, AnyonCharge::Tau, h)?.crossings_matrix(crossings)?,
            vac: representation(3, AnyonCharge::Vacuum, h)?.crossings_matrix(crossings)?.get(0, 0),
        })
    }

    fn coords(&self) -> [C64; 5] {
        [self.tau.get(0, 0), self.tau.get(0, 1), self.tau.get(1, 0), self.tau.get(1, 1), self.vac]
    }

    fn mul(&self, o: &Self) -> Self {
        Self { tau: &self.tau * &o.tau, vac: self.vac * o.vac }
    }

    fn adjoint(&self) -> Self {
        Self { tau: self.tau.adjoint(), vac: self.vac.conj() }
    }

    fn diff(&self, o: &Self) -> f64 {
        self.tau.max_abs_diff(&o.tau).max((self.vac - o.vac).norm())
    }
}

fn unroll(factors: &[Factor]) -> Vec<(usize, bool)> {
    factors
        .iter()
        .flat_map(|f| std::iter::repeat_n((f.generator, f.power > 0), f.power.unsigned_abs() as usize))
        .collect()
}

fn det2(m: &UnitaryMatrix) -> C64 {
    m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)
}

/// `T` placed on the phase structure of the word: τ block `±ω^W·T/√det T`,
/// vacuum scalar as the word has it.
fn snapped_ideal(word_op: &MacroOp, target: &UnitaryMatrix, winding: i64, profile: &ConventionProfile) -> Result<MacroOp> {
    if target.dim() != 2 || !target.is_unitary(1e-10) {
        return Err(CircuitError::InvalidInput("stand-in target must be a 2×2 unitary".into()));
    }
    let omega = model_constants(profile.handedness).tau_phase_unit();
    let special = target.scale(det2(target).sqrt().inv());
    let shaped = special.scale(omega.powi(winding as i32));
    let overlap: C64 = shaped.data().iter().zip(word_op.tau.data()).map(|(a, b)| a.conj() * b).sum();
    let sign = if overlap.re >= 0.0 { 1.0 } else { -1.0 };
    Ok(MacroOp { tau: shaped.scale(C64::new(sign, 0.0)), vac: word_op.vac })
}

fn pure_braids() -> Vec<Vec<Factor>> {
    let f = |pairs: &[(usize, i32)]| pairs.iter().map(|&(g, p)| Factor::new(g, p)).collect();
    vec![
        f(&[]),
        f(&[(1, 2)]),
        f(&[(2, 2)]),
        f(&[(1, 2), (2, 2)]),
        f(&[(2, 2), (1, 2)]),
        f(&[(1, 2), (2, -2), (1, 2)]),
        f(&[(2, 4), (1, -2)]),
        f(&[(1, -4), (2, 2), (1, 4)]),
    ]
}

fn group_projector(rep: &Representation, first: usize, size: usize) -> Result<UnitaryMatrix> {
    let diag: Vec<C64> = rep
        .basis()
        .trees()
        .iter()
        .map(|t| {
            let tau = t.internal_charges[size - 2] == AnyonCharge::Tau;
            C64::new(if tau { 1.0 } else { 0.0 }, 0.0)
        })
        .collect();
    let d = UnitaryMatrix::diagonal(&diag);
    if first == 1 {
        return Ok(d);
    }
    // Bring the group to the front, read its charge, move it back.
    let x = rep.crossings_matrix(&macro_crossing(1, first - 1, size, true))?;
    Ok(&(&x.adjoint() * &d) * &x)
}

fn sector_projector(rep: &Representation, start: usize, composition: &StrandComposition) -> Result<UnitaryMatrix> {
    let mut p = UnitaryMatrix::identity(rep.dim());
    let mut first = start;
    for &w in composition.widths() {
        if w > 1 {
            p = &p * &group_projector(rep, first, w)?;
        }
        first += w;
    }
    Ok(p)
}

/// Basis images `L(E_b)` for the five coordinates of a three-anyon operator.
fn fit_lift(
    rep: &Representation,
    profile: &ConventionProfile,
    start: usize,
    composition: &StrandComposition,
) -> Result<(Vec<UnitaryMatrix>, UnitaryMatrix)> {
    let p = sector_projector(rep, start, composition)?;
    let braids = pure_braids();
    let mut rows = Vec::with_capacity(braids.len() * 5);
    let mut images = Vec::with_capacity(braids.len());
    for b in &braids {
        rows.extend(MacroOp::of(&unroll(b), profile)?.coords());
        images.push(&rep.crossings_matrix(&expand(b, start, composition)?)? * &p);
    }
    let a = DMatrix::from_row_slice(braids.len(), 5, &rows);
    let pinv = a
        .clone()
        .pseudo_inverse(1e-12)
        .map_err(|e| CircuitError::StandIn(e.to_string()))?;
    let dim = rep.dim();
    let lift: Vec<UnitaryMatrix> = (0..5)
        .map(|b| {
            let mut acc = UnitaryMatrix::zeros(dim);
            for (k, img) in images.iter().enumerate() {
                acc = &acc + &img.scale(pinv[(b, k)]);
            }
            acc
        })
        .collect();
    for (k, img) in images.iter().enumerate() {
        let mut acc = UnitaryMatrix::zeros(dim);
        for (b, l) in lift.iter().enumerate() {
            acc = &acc + &l.scale(a[(k, b)]);
        }
        let r = acc.max_abs_diff(img);
        if r > FIT_TOL {
            return Err(CircuitError::StandIn(format!("lift residual {r:.3e} at start {start}")));
        }
    }
    Ok((lift, p))
}

/// Exact replacement for the forward action of `stage`.
fn forward_stand_in(stage: &Stage, qubits: usize, profile: &ConventionProfile, ideal: &UnitaryMatrix) -> Result<UnitaryMatrix> {
    if stage.composition.strands() != 3 {
        return Err(CircuitError::InvalidInput(format!("stage {}: stand-ins need three macro-strands", stage.label)));
    }
    let rep = representation(ANYONS_PER_QUBIT * qubits, AnyonCharge::Vacuum, profile.handedness)?;
    let order = profile.word_reading_order;
    let word_op = MacroOp::of(&stage.word.crossings(order), profile)?;
    let seq = stage.macro_time_order(profile);
    let seq_op = MacroOp::of(&unroll(&seq), profile)?;
    // The realized sequence is the printed word conjugated by the strand
    // relabeling: the identity or the half twist σ_1σ_2σ_1.
    let half_twist = MacroOp::of(&[(1, true), (2, true), (1, true)], profile)?;
    let identity = MacroOp { tau: UnitaryMatrix::identity(2), vac: C64::new(1.0, 0.0) };
    let relabel = [identity, half_twist]
        .into_iter()
        .find(|c| c.mul(&word_op).mul(&c.adjoint()).diff(&seq_op) < FIT_TOL)
        .ok_or_else(|| CircuitError::StandIn(format!("stage {}: cannot relate printed and woven word", stage.label)))?;

    let u = snapped_ideal(&word_op, ideal, stage.word.winding(), profile)?;
    let correction = relabel.mul(&word_op.adjoint().mul(&u)).mul(&relabel.adjoint());

    let (lift, p) = fit_lift(&rep, profile, stage.start, &stage.composition)?;
    let mut inner = &UnitaryMatrix::identity(rep.dim()) - &p;
    for (l, c) in lift.iter().zip(correction.coords()) {
        inner = &inner + &l.scale(c);
    }
    let braid = rep.crossings_matrix(&expand(&seq, stage.start, &stage.composition)?)?;
    Ok(&braid * &inner)
}

/// Stage matrix with the word replaced by its exact gate.
pub fn stand_in(stage: &Stage, qubits: usize, profile: &ConventionProfile) -> Result<UnitaryMatrix> {
    match &stage.ideal {
        None => stage_matrix(stage, qubits, profile),
        Some(ideal) => {
            let fwd = forward_stand_in(stage, qubits, profile, ideal)?;
            Ok(if stage.inverse { fwd.adjoint() } else { fwd })
        }
    }
}

/// Evaluate with every approximating stage replaced by its stand-in.
pub fn evaluate_exact(circuit: &GateCircuit) -> Result<Evaluation> {
    circuit.validate()?;
    let dim = representation(circuit.anyons(), AnyonCharge::Vacuum, circuit.profile.handedness)?.dim();
    let mut full = UnitaryMatrix::identity(dim);
    for s in &circuit.stages {
        full = &stand_in(s, circuit.qubits, &circuit.profile)? * &full;
    }
    evaluation(circuit.qubits, full)
}
