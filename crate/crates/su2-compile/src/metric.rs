use fib_core::C64;
use fusion_basis::UnitaryMatrix;
use nalgebra::DMatrix;

use crate::{CompileError, Quaternion, Result};

const GRID: usize = 72;
const PHASE_TOL: f64 = 1e-13;

fn to_na(m: &UnitaryMatrix) -> DMatrix<C64> {
    DMatrix::from_row_slice(m.dim(), m.dim(), m.data())
}

pub fn max_singular_value(m: &UnitaryMatrix) -> f64 {
    if m.dim() == 0 {
        return 0.0;
    }
    to_na(m).singular_values().max()
}

/// Smallest eigenvalue of `M·M†`.
pub fn min_gram_eigenvalue(m: &UnitaryMatrix) -> f64 {
    let a = to_na(m);
    let gram = &a * a.adjoint();
    gram.symmetric_eigenvalues().min()
}

fn is_unitary_2x2(m: &UnitaryMatrix) -> bool {
    m.dim() == 2 && m.is_unitary(1e-12)
}

/// `min_θ σ_max(u1 − e^{iθ}·u2)`.
pub fn distance(u1: &UnitaryMatrix, u2: &UnitaryMatrix) -> Result<f64> {
    if u1.dim() != u2.dim() {
        return Err(CompileError::InvalidInput(format!(
            "dimension mismatch: {} vs {}",
            u1.dim(),
            u2.dim()
        )));
    }
    if is_unitary_2x2(u1) && is_unitary_2x2(u2) {
        let a = Quaternion::from_unitary(u1)?;
        let b = Quaternion::from_unitary(u2)?;
        return Ok(a.distance(&b));
    }
    let f = |theta: f64| max_singular_value(&(u1 - &u2.scale(fib_core::cis(theta))));
    let tr: C64 = u2
        .data()
        .iter()
        .zip(u1.data())
        .map(|(b, a)| b.conj() * a)
        .sum();
    let step = std::f64::consts::TAU / GRID as f64;
    let mut best = (tr.arg(), f(tr.arg()));
    for k in 0..GRID {
        let t = k as f64 * step;
        let v = f(t);
        if v < best.1 {
            best = (t, v);
        }
    }
    let (mut lo, mut hi) = (best.0 - step, best.0 + step);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > PHASE_TOL {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
    }
    Ok(best.1.min(f1).min(f2))
}

/// `1 − √λ_min(B·B†)` for the block `B` on `indices`.
pub fn leakage(full: &UnitaryMatrix, indices: &[usize]) -> Result<f64> {
    if indices.is_empty() {
        return Err(CompileError::InvalidInput("empty computational index list".into()));
    }
    let mut seen = indices.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != indices.len() || seen.last().is_some_and(|&i| i >= full.dim()) {
        return Err(CompileError::InvalidInput("indices must be distinct and in range".into()));
    }
    let block = full.submatrix(indices);
    let lambda = min_gram_eigenvalue(&block).max(0.0);
    Ok((1.0 - lambda.sqrt()).clamp(0.0, 1.0))
}
