use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use fib_core::{model_constants, AnyonCharge, Handedness, ModelConstants, C64};

use crate::{enumerate_basis, BasisError, BraidWord, FusionBasis, ReadingOrder, Result, UnitaryMatrix};

/// Braid generator stored by rows; each row has at most two nonzeros.
#[derive(Debug, Clone)]
pub struct SparseGenerator {
    rows: Vec<Vec<(usize, C64)>>,
}

impl SparseGenerator {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn to_dense(&self) -> UnitaryMatrix {
        let mut m = UnitaryMatrix::zeros(self.dim());
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut rows = vec![Vec::new(); self.dim()];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                rows[c].push((r, v.conj()));
            }
        }
        for row in &mut rows {
            row.sort_by_key(|&(c, _)| c);
        }
        Self { rows }
    }

    /// `self · m`.
    pub fn apply_left(&self, m: &UnitaryMatrix) -> UnitaryMatrix {
        let n = m.dim();
        let mut out = UnitaryMatrix::zeros(n);
        let src = m.data();
        let dst = out.data_mut();
        for (r, row) in self.rows.iter().enumerate() {
            let out_row = &mut dst[r * n..(r + 1) * n];
            for &(k, v) in row {
                let in_row = &src[k * n..(k + 1) * n];
                for (o, &x) in out_row.iter_mut().zip(in_row) {
                    *o += v * x;
                }
            }
        }
        out
    }
}

/// Matrix of σ_i on `basis`. For `i = 1` it is diagonal in the first
/// internal charge; otherwise it is the local R action conjugated by the
/// F-move that makes anyons `i` and `i + 1` fuse directly.
pub fn braid_generator(basis: &FusionBasis, i: usize, handedness: Handedness) -> Result<UnitaryMatrix> {
    Ok(build_generator(basis, i, &model_constants(handedness))?.to_dense())
}

fn build_generator(basis: &FusionBasis, i: usize, m: &ModelConstants) -> Result<SparseGenerator> {
    let n = basis.n();
    if i == 0 || i >= n {
        return Err(BasisError::InvalidInput(format!(
            "generator index {i} out of range for {n} anyons"
        )));
    }
    use AnyonCharge::*;
    let mut rows = vec![Vec::new(); basis.dim()];
    for (col, tree) in basis.trees().iter().enumerate() {
        if i == 1 {
            rows[col].push((col, m.r(tree.internal_charges[0])));
            continue;
        }
        // a: charge left of the pair, mid: a fused with anyon i, c: after anyon i+1.
        let a = tree.prefix_charge(i - 1);
        let mid = tree.internal_charges[i - 2];
        let c = tree.internal_charges[i - 1];
        if a == Tau && c == Tau {
            for mid2 in AnyonCharge::ALL {
                let mut t2 = tree.clone();
                t2.internal_charges[i - 2] = mid2;
                let Some(row) = basis.index_of(&t2) else { continue };
                let amp: C64 = AnyonCharge::ALL
                    .iter()
                    .map(|&y| m.f(mid2, y) * m.r(y) * m.f(y, mid))
                    .sum();
                rows[row].push((col, amp));
            }
        } else {
            let y = if a == Vacuum { c } else { Tau };
            rows[col].push((col, m.r(y)));
        }
    }
    for row in &mut rows {
        row.sort_by_key(|&(c, _)| c);
    }
    Ok(SparseGenerator { rows })
}

/// Basis together with cached generators and their inverses.
#[derive(Debug)]
pub struct Representation {
    basis: FusionBasis,
    handedness: Handedness,
    forward: Vec<SparseGenerator>,
    backward: Vec<SparseGenerator>,
}

impl Representation {
    pub fn new(n: usize, sector: AnyonCharge, handedness: Handedness) -> Result<Self> {
        let basis = enumerate_basis(n, sector)?;
        let m = model_constants(handedness);
        let forward = (1..n)
            .map(|i| build_generator(&basis, i, &m))
            .collect::<Result<Vec<_>>>()?;
        let backward = forward.iter().map(|g| g.adjoint()).collect();
        Ok(Self { basis, handedness, forward, backward })
    }

    pub fn basis(&self) -> &FusionBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn handedness(&self) -> Handedness {
        self.handedness
    }

    pub fn generator(&self, i: usize, positive: bool) -> Result<&SparseGenerator> {
        let table = if positive { &self.forward } else { &self.backward };
        i.checked_sub(1)
            .and_then(|k| table.get(k))
            .ok_or_else(|| BasisError::InvalidInput(format!(
                "generator index {i} out of range for {} anyons",
                self.basis.n()
            )))
    }

    /// Left-multiply `m` by the crossings, applied in the listed order.
    pub fn apply_crossings(&self, m: &UnitaryMatrix, crossings: &[(usize, bool)]) -> Result<UnitaryMatrix> {
        let mut acc = m.clone();
        for &(g, positive) in crossings {
            acc = self.generator(g, positive)?.apply_left(&acc);
        }
        Ok(acc)
    }

    pub fn crossings_matrix(&self, crossings: &[(usize, bool)]) -> Result<UnitaryMatrix> {
        self.apply_crossings(&UnitaryMatrix::identity(self.dim()), crossings)
    }

    pub fn word_matrix(&self, word: &BraidWord, order: ReadingOrder) -> Result<UnitaryMatrix> {
        if word.max_generator() >= self.basis.n() {
            return Err(BasisError::InvalidInput(format!(
                "word uses s{} but only {} anyons",
                word.max_generator(),
                self.basis.n()
            )));
        }
        self.crossings_matrix(&word.crossings(order))
    }
}

type CacheKey = (usize, AnyonCharge, Handedness);

/// Shared, lazily built representation for `(n, sector, handedness)`.
pub fn representation(n: usize, sector: AnyonCharge, handedness: Handedness) -> Result<Arc<Representation>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<Representation>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (n, sector, handedness);
    if let Some(r) = cache.lock().expect("representation cache poisoned").get(&key) {
        return Ok(Arc::clone(r));
    }
    let rep = Arc::new(Representation::new(n, sector, handedness)?);
    let mut guard = cache.lock().expect("representation cache poisoned");
    Ok(Arc::clone(guard.entry(key).or_insert(rep)))
}
