//! Exact qubit-level matrices. Qubit 1 is the most significant bit.

use fib_core::C64;
use fusion_basis::UnitaryMatrix;

use crate::{CircuitError, Result};

fn check(n: usize, qubits: &[usize]) -> Result<()> {
    if qubits.iter().any(|&q| q == 0 || q > n) {
        return Err(CircuitError::InvalidInput(format!("qubit out of range 1..={n}")));
    }
    let mut v = qubits.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.len() != qubits.len() {
        return Err(CircuitError::InvalidInput("qubits must be distinct".into()));
    }
    Ok(())
}

fn bit(state: usize, n: usize, q: usize) -> usize {
    (state >> (n - q)) & 1
}

/// `u` on `target` whenever every control qubit is 1.
pub fn controlled(n: usize, controls: &[usize], target: usize, u: &UnitaryMatrix) -> Result<UnitaryMatrix> {
    let mut all = controls.to_vec();
    all.push(target);
    check(n, &all)?;
    let dim = 1 << n;
    let shift = n - target;
    Ok(UnitaryMatrix::from_fn(dim, |r, c| {
        let active = controls.iter().all(|&q| bit(c, n, q) == 1);
        let rest_r = r & !(1 << shift);
        let rest_c = c & !(1 << shift);
        if rest_r != rest_c {
            return C64::new(0.0, 0.0);
        }
        let (tr, tc) = ((r >> shift) & 1, (c >> shift) & 1);
        if active {
            u.get(tr, tc)
        } else if tr == tc {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    }))
}

/// `u` on one qubit.
pub fn single(n: usize, target: usize, u: &UnitaryMatrix) -> Result<UnitaryMatrix> {
    controlled(n, &[], target, u)
}

pub fn swap(n: usize, a: usize, b: usize) -> Result<UnitaryMatrix> {
    check(n, &[a, b])?;
    let dim = 1 << n;
    let perm = |s: usize| {
        let (x, y) = (bit(s, n, a), bit(s, n, b));
        let s = s & !(1 << (n - a)) & !(1 << (n - b));
        s | (y << (n - a)) | (x << (n - b))
    };
    Ok(UnitaryMatrix::from_fn(dim, |r, c| {
        C64::new(if perm(c) == r { 1.0 } else { 0.0 }, 0.0)
    }))
}

/// Three-qubit matrix acting with `s` on the target for the listed control
/// patterns (`0b01` meaning qubit 1 = 0, qubit 2 = 1).
pub fn block_gate(s: &UnitaryMatrix, patterns: &[usize]) -> UnitaryMatrix {
    let mut m = UnitaryMatrix::identity(8);
    for &c in patterns {
        for i in 0..2 {
            for j in 0..2 {
                m.set(2 * c + i, 2 * c + j, s.get(i, j));
            }
        }
    }
    m
}

/// M(I,S): `s` when the two controls differ.
pub fn m_identity(s: &UnitaryMatrix) -> UnitaryMatrix {
    block_gate(s, &[0b01, 0b10])
}

/// M(iX,S): `s` unless both controls are 0.
pub fn m_not(s: &UnitaryMatrix) -> UnitaryMatrix {
    block_gate(s, &[0b01, 0b10, 0b11])
}

/// Doubly controlled `s`.
pub fn ccs(s: &UnitaryMatrix) -> UnitaryMatrix {
    block_gate(s, &[0b11])
}

/// CNOT₁₂ · CS₂₃ · CNOT₁₂, which equals M(I,S).
pub fn three_controlled_product(s: &UnitaryMatrix) -> Result<UnitaryMatrix> {
    let x = su2_compile::gates::pauli_x();
    let cnot = controlled(3, &[1], 2, &x)?;
    let cs = controlled(3, &[2], 3, s)?;
    Ok(&(&cnot * &cs) * &cnot)
}

/// Five controlled gates with `V² = U`:
/// `CV(1→3) · CU†(1→2) · CV†(2→3) · CU(1→2) · CV(2→3)`, with `U` on qubit 2
/// being `iX`. Equals the doubly controlled `V²` on qubit 3.
pub fn five_gate_product(v: &UnitaryMatrix) -> Result<UnitaryMatrix> {
    let ix = su2_compile::gates::i_x();
    let cu12 = controlled(3, &[1], 2, &ix)?;
    let cv23 = controlled(3, &[2], 3, v)?;
    let cv13 = controlled(3, &[1], 3, v)?;
    Ok(&(&(&(&cv13 * &cu12.adjoint()) * &cv23.adjoint()) * &cu12) * &cv23)
}

#[cfg(test)]
mod tests {
    use super::*;
    use su2_compile::gates;

    #[test]
    fn controlled_not_truth_table() {
        let cx = controlled(2, &[1], 2, &gates::pauli_x()).unwrap();
        for (input, output) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
            assert_eq!(cx.get(output, input), C64::new(1.0, 0.0));
        }
        assert!(controlled(2, &[1], 1, &gates::pauli_x()).is_err());
        assert!(controlled(2, &[3], 1, &gates::pauli_x()).is_err());
    }

    #[test]
    fn swap_exchanges_labels() {
        let s = swap(3, 1, 2).unwrap();
        // |100⟩ → |010⟩
        assert_eq!(s.get(0b010, 0b100), C64::new(1.0, 0.0));
        assert_eq!(s.get(0b001, 0b001), C64::new(1.0, 0.0));
        assert!(s.is_unitary(1e-14));
    }

    #[test]
    fn block_gate_layout() {
        let m = ccs(&gates::pauli_x());
        assert_eq!(m.get(7, 6), C64::new(1.0, 0.0));
        assert_eq!(m.get(5, 5), C64::new(1.0, 0.0));
    }
}
