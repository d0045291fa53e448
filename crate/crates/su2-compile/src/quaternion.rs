use std::ops::Mul;

use fib_core::{cis, model_constants, Handedness, C64};
use fusion_basis::{BraidWord, ReadingOrder, UnitaryMatrix};
use serde::{Deserialize, Serialize};

use crate::{tau_matrix, CompileError, Result};

/// Unit quaternion standing for `w·I − i(x·X + y·Y + z·Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const IDENTITY: Quaternion = Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dot(&self, o: &Self) -> f64 {
        self.w * o.w + self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }

    /// Representative with a nonnegative leading nonzero component, plus the
    /// sign that was removed.
    pub fn canonical(&self) -> (Self, i8) {
        let lead = [self.w, self.x, self.y, self.z]
            .into_iter()
            .find(|v| v.abs() > 1e-15)
            .unwrap_or(1.0);
        if lead < 0.0 {
            (self.neg(), -1)
        } else {
            (*self, 1)
        }
    }

    /// Reads a special unitary 2×2 matrix.
    pub fn from_su2(m: &UnitaryMatrix) -> Self {
        let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
        Self::new(
            0.5 * (a.re + d.re),
            -0.5 * (b.im + c.im),
            0.5 * (c.re - b.re),
            0.5 * (d.im - a.im),
        )
    }

    /// Strips the global phase of a 2×2 unitary (dividing by √det) and reads
    /// the result. The sign of the square root is arbitrary.
    pub fn from_unitary(m: &UnitaryMatrix) -> Result<Self> {
        if m.dim() != 2 {
            return Err(CompileError::InvalidInput("quaternions need a 2×2 matrix".into()));
        }
        let det = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
        if (det.norm() - 1.0).abs() > 1e-8 {
            return Err(CompileError::InvalidInput("matrix is not unitary".into()));
        }
        Ok(Self::from_su2(&m.scale(det.sqrt().inv())))
    }

    pub fn to_matrix(&self) -> UnitaryMatrix {
        let c = C64::new;
        UnitaryMatrix::from_rows(&[
            vec![c(self.w, -self.z), c(-self.y, -self.x)],
            vec![c(self.y, -self.x), c(self.w, self.z)],
        ])
        .expect("2x2")
    }

    /// Phase-free spectral distance between the represented unitaries.
    pub fn distance(&self, o: &Self) -> f64 {
        (2.0 * (1.0 - self.dot(o).abs().min(1.0))).max(0.0).sqrt()
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

const MAX_POWER: i32 = 9;

/// Precomputed quaternions of `ω^{−p}·σ_i^p` on the τ sector, `|p| ≤ 9`.
#[derive(Debug, Clone)]
pub struct Su2Evaluator {
    handedness: Handedness,
    order: ReadingOrder,
    table: [[Quaternion; (2 * MAX_POWER + 1) as usize]; 2],
}

impl Su2Evaluator {
    pub fn new(handedness: Handedness, order: ReadingOrder) -> Result<Self> {
        let omega = model_constants(handedness).tau_phase_unit();
        let mut table = [[Quaternion::IDENTITY; (2 * MAX_POWER + 1) as usize]; 2];
        for g in 1..=2usize {
            let word = BraidWord::from_pairs(&[(g, 1)])?;
            let m = tau_matrix(&word, handedness, order)?.scale(omega.inv());
            let q = Quaternion::from_su2(&m);
            let qi = q.conj();
            let mut up = Quaternion::IDENTITY;
            let mut down = Quaternion::IDENTITY;
            for p in 1..=MAX_POWER {
                up = up * q;
                down = down * qi;
                table[g - 1][(MAX_POWER + p) as usize] = up;
                table[g - 1][(MAX_POWER - p) as usize] = down;
            }
        }
        Ok(Self { handedness, order, table })
    }

    pub fn handedness(&self) -> Handedness {
        self.handedness
    }

    pub fn factor(&self, generator: usize, power: i32) -> Quaternion {
        let p = power.rem_euclid(20);
        // σ^20 has τ block ω^20·I, so the SU(2) part has period 20.
        let p = if p > 10 { p - 20 } else { p };
        if p.abs() <= MAX_POWER {
            self.table[generator - 1][(MAX_POWER + p) as usize]
        } else {
            // |p| = 10: σ^10 = I, and ω^{-10} = −1.
            Quaternion::IDENTITY.neg()
        }
    }

    /// SU(2) part `q` of the word with τ block `ω^W·U(q)`, un-canonicalised.
    pub fn raw(&self, word: &BraidWord) -> Quaternion {
        let mut q = Quaternion::IDENTITY;
        let printed = word.factors();
        match self.order {
            ReadingOrder::PrintedLeftLast => {
                for f in printed {
                    q = q * self.factor(f.generator, f.power);
                }
            }
            ReadingOrder::PrintedLeftFirst => {
                for f in printed.iter().rev() {
                    q = q * self.factor(f.generator, f.power);
                }
            }
        }
        q
    }

    pub fn block(&self, word: &BraidWord) -> (Quaternion, i8) {
        self.raw(word).canonical()
    }

    /// `ω^W`, the deterministic phase of the τ block.
    pub fn phase(&self, word: &BraidWord) -> C64 {
        cis(self.handedness.sign() * word.winding() as f64 * std::f64::consts::PI / 10.0)
    }
}

/// τ-sector block of a three-strand word as `(q, s)` with
/// `τ block = s·ω^W·U(q)`, `ω = e^{±iπ/10}` by handedness.
pub fn su2_block(word: &BraidWord, handedness: Handedness, order: ReadingOrder) -> Result<(Quaternion, i8)> {
    if word.max_generator() > 2 {
        return Err(CompileError::InvalidInput("su2_block needs a three-strand word".into()));
    }
    Ok(Su2Evaluator::new(handedness, order)?.block(word))
}
