//! Exact model data for the Fibonacci anyon theory.
//!
//! Two charges exist, the vacuum `1` and `τ`, with the single nontrivial
//! fusion rule `τ × τ = 1 + τ`. Everything downstream is expressed in terms
//! of the F and R matrices returned by [`model_constants`].

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub type C64 = Complex64;

/// Global tolerance for unitarity and involution checks.
pub const TOLERANCE: f64 = 1e-12;

/// The golden ratio.
pub const PHI: f64 = 1.618_033_988_749_895;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AnyonCharge {
    Vacuum,
    Tau,
}

impl AnyonCharge {
    pub const ALL: [AnyonCharge; 2] = [AnyonCharge::Vacuum, AnyonCharge::Tau];

    /// Row/column index into the 2×2 F and R matrices.
    pub fn index(self) -> usize {
        match self {
            AnyonCharge::Vacuum => 0,
            AnyonCharge::Tau => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            0 => Some(AnyonCharge::Vacuum),
            1 => Some(AnyonCharge::Tau),
            _ => None,
        }
    }

    /// Quantum dimension: 1 for the vacuum, φ for τ.
    pub fn quantum_dimension(self) -> f64 {
        match self {
            AnyonCharge::Vacuum => 1.0,
            AnyonCharge::Tau => PHI,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            AnyonCharge::Vacuum => "1",
            AnyonCharge::Tau => "t",
        }
    }
}

impl fmt::Display for AnyonCharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyonCharge::Vacuum => write!(f, "vac"),
            AnyonCharge::Tau => write!(f, "tau"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseChargeError(pub String);

impl fmt::Display for ParseChargeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown charge '{}' (expected vac or tau)", self.0)
    }
}

impl std::error::Error for ParseChargeError {}

impl FromStr for AnyonCharge {
    type Err = ParseChargeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "vac" | "vacuum" | "1" | "0" => Ok(AnyonCharge::Vacuum),
            "tau" | "t" | "τ" => Ok(AnyonCharge::Tau),
            _ => Err(ParseChargeError(s.to_string())),
        }
    }
}

/// Fusion outcomes of `a × b`, in ascending order.
pub fn fuse(a: AnyonCharge, b: AnyonCharge) -> Vec<AnyonCharge> {
    use AnyonCharge::*;
    match (a, b) {
        (Vacuum, c) | (c, Vacuum) => vec![c],
        (Tau, Tau) => vec![Vacuum, Tau],
    }
}

/// True when `c` appears in `a × b`.
pub fn fusion_allowed(a: AnyonCharge, b: AnyonCharge, c: AnyonCharge) -> bool {
    fuse(a, b).contains(&c)
}

/// Chirality of the R-matrix solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Handedness {
    #[default]
    Right,
    Left,
}

impl Handedness {
    pub const ALL: [Handedness; 2] = [Handedness::Right, Handedness::Left];

    /// +1 for Right, −1 for Left.
    pub fn sign(self) -> f64 {
        match self {
            Handedness::Right => 1.0,
            Handedness::Left => -1.0,
        }
    }
}

impl fmt::Display for Handedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Handedness::Right => write!(f, "right"),
            Handedness::Left => write!(f, "left"),
        }
    }
}

impl FromStr for Handedness {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "right" | "r" => Ok(Handedness::Right),
            "left" | "l" => Ok(Handedness::Left),
            _ => Err(format!("unknown handedness '{s}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelConstants {
    pub phi: f64,
    pub f_matrix: [[f64; 2]; 2],
    pub r_matrix: [[C64; 2]; 2],
    pub handedness: Handedness,
}

pub fn model_constants(handedness: Handedness) -> ModelConstants {
    let phi = PHI;
    let a = 1.0 / phi;
    let b = 1.0 / phi.sqrt();
    let s = handedness.sign();
    let pi = std::f64::consts::PI;
    let zero = C64::new(0.0, 0.0);
    ModelConstants {
        phi,
        f_matrix: [[a, b], [b, -a]],
        r_matrix: [
            [cis(s * 4.0 * pi / 5.0), zero],
            [zero, -cis(s * 2.0 * pi / 5.0)],
        ],
        handedness,
    }
}

impl ModelConstants {
    /// R eigenvalue for two τ anyons fusing to `c`.
    pub fn r(&self, c: AnyonCharge) -> C64 {
        self.r_matrix[c.index()][c.index()]
    }

    /// F-matrix entry indexed by intermediate charges.
    pub fn f(&self, a: AnyonCharge, b: AnyonCharge) -> f64 {
        self.f_matrix[a.index()][b.index()]
    }

    /// Phase ω with ω² = det of the τ-sector block of σ_1 on three anyons.
    /// Every σ_i^p has τ block ω^p times a special unitary.
    pub fn tau_phase_unit(&self) -> C64 {
        cis(self.handedness.sign() * std::f64::consts::PI / 10.0)
    }

    /// Scalar that σ_i^p contributes to the vacuum-sector block on three anyons.
    pub fn vacuum_phase_unit(&self) -> C64 {
        self.r(AnyonCharge::Tau)
    }
}

/// e^{iθ}.
pub fn cis(theta: f64) -> C64 {
    C64::from_polar(1.0, theta)
}

pub fn approx_eq(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f_squared(m: &ModelConstants) -> [[f64; 2]; 2] {
        let f = m.f_matrix;
        let mut out = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = (0..2).map(|k| f[i][k] * f[k][j]).sum();
            }
        }
        out
    }

    #[test]
    fn fusion_rule() {
        use AnyonCharge::*;
        assert_eq!(fuse(Tau, Tau), vec![Vacuum, Tau]);
        assert_eq!(fuse(Vacuum, Tau), vec![Tau]);
        assert_eq!(fuse(Tau, Vacuum), vec![Tau]);
        assert_eq!(fuse(Vacuum, Vacuum), vec![Vacuum]);
    }

    #[test]
    fn golden_ratio() {
        assert!((PHI - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((PHI * PHI - PHI - 1.0).abs() < 1e-14);
    }

    #[test]
    fn f_is_real_symmetric_involution() {
        for h in Handedness::ALL {
            let m = model_constants(h);
            assert!((m.f_matrix[0][0] - 0.618_033_988_7).abs() < 1e-10);
            assert_eq!(m.f_matrix[0][1], m.f_matrix[1][0]);
            let sq = f_squared(&m);
            for i in 0..2 {
                for j in 0..2 {
                    let id = if i == j { 1.0 } else { 0.0 };
                    assert!((sq[i][j] - id).abs() < TOLERANCE);
                }
            }
        }
    }

    #[test]
    fn r_values() {
        let pi = std::f64::consts::PI;
        let r = model_constants(Handedness::Right);
        assert!(approx_eq(r.r(AnyonCharge::Vacuum), cis(4.0 * pi / 5.0), 1e-15));
        assert!(approx_eq(r.r(AnyonCharge::Tau), -cis(2.0 * pi / 5.0), 1e-15));
        let l = model_constants(Handedness::Left);
        assert!(approx_eq(l.r(AnyonCharge::Vacuum), cis(-4.0 * pi / 5.0), 1e-15));
        assert!(approx_eq(l.r(AnyonCharge::Tau), -cis(-2.0 * pi / 5.0), 1e-15));
        for m in [r, l] {
            assert_eq!(m.r_matrix[0][1], C64::new(0.0, 0.0));
            assert_eq!(m.r_matrix[1][0], C64::new(0.0, 0.0));
            for c in AnyonCharge::ALL {
                assert!((m.r(c).norm() - 1.0).abs() < TOLERANCE);
            }
        }
    }

    #[test]
    fn tau_phase_squares_to_sigma_determinant() {
        for h in Handedness::ALL {
            let m = model_constants(h);
            let det = m.r(AnyonCharge::Vacuum) * m.r(AnyonCharge::Tau);
            let w = m.tau_phase_unit();
            assert!(approx_eq(w * w, det, 1e-14));
        }
    }

    #[test]
    fn charge_parsing() {
        assert_eq!("vac".parse::<AnyonCharge>().unwrap(), AnyonCharge::Vacuum);
        assert_eq!("TAU".parse::<AnyonCharge>().unwrap(), AnyonCharge::Tau);
        assert!("x".parse::<AnyonCharge>().is_err());
        assert_eq!("left".parse::<Handedness>().unwrap(), Handedness::Left);
    }
}
