//! Common 2×2 targets.

use fib_core::C64;
use fusion_basis::UnitaryMatrix;

use crate::{CompileError, Result};

fn m2(a: C64, b: C64, c: C64, d: C64) -> UnitaryMatrix {
    UnitaryMatrix::from_rows(&[vec![a, b], vec![c, d]]).expect("2x2")
}

const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn identity() -> UnitaryMatrix {
    UnitaryMatrix::identity(2)
}

pub fn pauli_x() -> UnitaryMatrix {
    m2(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0))
}

pub fn pauli_y() -> UnitaryMatrix {
    m2(c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0))
}

pub fn pauli_z() -> UnitaryMatrix {
    m2(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0))
}

pub fn i_x() -> UnitaryMatrix {
    pauli_x().scale(c(0.0, 1.0))
}

/// Principal square root of iX: (I + iX)/√2.
pub fn sqrt_i_x() -> UnitaryMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    m2(c(s, 0.0), c(0.0, s), c(0.0, s), c(s, 0.0))
}

pub fn hadamard() -> UnitaryMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    m2(c(s, 0.0), c(s, 0.0), c(s, 0.0), c(-s, 0.0))
}

/// `exp(iθX)`; iX at θ = π/2.
pub fn x_rotation(theta: f64) -> UnitaryMatrix {
    m2(c(theta.cos(), 0.0), c(0.0, theta.sin()), c(0.0, theta.sin()), c(theta.cos(), 0.0))
}

pub fn by_name(name: &str) -> Result<UnitaryMatrix> {
    let m = match name.trim() {
        "I" | "id" => identity(),
        "X" | "NOT" => pauli_x(),
        "Y" => pauli_y(),
        "Z" => pauli_z(),
        "iX" => i_x(),
        "-iX" => i_x().scale(c(-1.0, 0.0)),
        "H" => hadamard(),
        "sqrtiX" | "sqrtNOT" => sqrt_i_x(),
        other => return Err(CompileError::InvalidInput(format!("unknown target '{other}'"))),
    };
    Ok(m)
}

pub fn is_hermitian(m: &UnitaryMatrix, tol: f64) -> bool {
    m.max_abs_diff(&m.adjoint()) < tol
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_squares_to_ix() {
        assert!(sqrt_i_x().matmul(&sqrt_i_x()).max_abs_diff(&i_x()) < 1e-15);
        assert!(x_rotation(std::f64::consts::FRAC_PI_2).max_abs_diff(&i_x()) < 1e-15);
    }

    #[test]
    fn named_targets() {
        for n in ["I", "X", "Y", "Z", "iX", "-iX", "H", "sqrtiX"] {
            assert!(by_name(n).unwrap().is_unitary(1e-14));
        }
        assert!(by_name("T").is_err());
        assert!(is_hermitian(&pauli_x(), 1e-12));
        assert!(!is_hermitian(&i_x(), 1e-12));
    }
}
