use fib_core::{fusion_allowed, AnyonCharge};
use serde::{Deserialize, Serialize};

use crate::{BasisError, Result};

/// Left-nested fusion tree: `internal_charges[k]` is the total charge of
/// the first `k + 2` anyons, so the last entry is the overall charge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FusionTree {
    pub internal_charges: Vec<AnyonCharge>,
}

impl FusionTree {
    pub fn n(&self) -> usize {
        self.internal_charges.len() + 1
    }

    pub fn total_charge(&self) -> AnyonCharge {
        *self.internal_charges.last().unwrap_or(&AnyonCharge::Tau)
    }

    /// Charge of the first `k` anyons (`1 ≤ k ≤ n`).
    pub fn prefix_charge(&self, k: usize) -> AnyonCharge {
        if k <= 1 {
            AnyonCharge::Tau
        } else {
            self.internal_charges[k - 2]
        }
    }

    pub fn is_valid(&self) -> bool {
        let mut prev = AnyonCharge::Tau;
        for &c in &self.internal_charges {
            if !fusion_allowed(prev, AnyonCharge::Tau, c) {
                return false;
            }
            prev = c;
        }
        true
    }

    /// Compact label such as `1t1t`.
    pub fn label(&self) -> String {
        self.internal_charges.iter().map(|c| c.symbol()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionBasis {
    n: usize,
    sector: AnyonCharge,
    trees: Vec<FusionTree>,
}

impl FusionBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sector(&self) -> AnyonCharge {
        self.sector
    }

    pub fn dim(&self) -> usize {
        self.trees.len()
    }

    pub fn trees(&self) -> &[FusionTree] {
        &self.trees
    }

    pub fn index_of(&self, tree: &FusionTree) -> Option<usize> {
        self.trees.binary_search(tree).ok()
    }
}

/// All fusion trees of `n` τ anyons with total charge `sector`, sorted
/// lexicographically with Vacuum < Tau.
pub fn enumerate_basis(n: usize, sector: AnyonCharge) -> Result<FusionBasis> {
    if n == 0 {
        return Err(BasisError::InvalidInput("anyon count must be at least 1".into()));
    }
    let mut trees = Vec::new();
    let mut stack = Vec::with_capacity(n - 1);
    extend(n - 1, AnyonCharge::Tau, sector, &mut stack, &mut trees);
    Ok(FusionBasis { n, sector, trees })
}

fn extend(
    remaining: usize,
    prev: AnyonCharge,
    sector: AnyonCharge,
    stack: &mut Vec<AnyonCharge>,
    out: &mut Vec<FusionTree>,
) {
    if remaining == 0 {
        if prev == sector {
            out.push(FusionTree { internal_charges: stack.clone() });
        }
        return;
    }
    for c in AnyonCharge::ALL {
        if fusion_allowed(prev, AnyonCharge::Tau, c) {
            stack.push(c);
            extend(remaining - 1, c, sector, stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use AnyonCharge::*;

    #[test]
    fn small_dimensions() {
        assert_eq!(enumerate_basis(1, Vacuum).unwrap().dim(), 0);
        assert_eq!(enumerate_basis(1, Tau).unwrap().dim(), 1);
        assert_eq!(enumerate_basis(2, Vacuum).unwrap().dim(), 1);
        assert_eq!(enumerate_basis(3, Tau).unwrap().dim(), 2);
        assert_eq!(enumerate_basis(4, Vacuum).unwrap().dim(), 2);
        assert_eq!(enumerate_basis(8, Vacuum).unwrap().dim(), 13);
        assert_eq!(enumerate_basis(12, Vacuum).unwrap().dim(), 89);
    }

    #[test]
    fn zero_anyons_rejected() {
        assert!(enumerate_basis(0, Tau).is_err());
    }

    #[test]
    fn ordering_is_lexicographic_and_valid() {
        let b = enumerate_basis(7, Tau).unwrap();
        for w in b.trees().windows(2) {
            assert!(w[0] < w[1]);
        }
        for t in b.trees() {
            assert!(t.is_valid());
            assert_eq!(t.total_charge(), Tau);
            assert_eq!(b.index_of(t).map(|i| &b.trees()[i]), Some(t));
        }
    }

    #[test]
    fn three_anyon_labels() {
        let b = enumerate_basis(3, Tau).unwrap();
        let labels: Vec<_> = b.trees().iter().map(|t| t.label()).collect();
        assert_eq!(labels, vec!["1t", "tt"]);
    }
}
