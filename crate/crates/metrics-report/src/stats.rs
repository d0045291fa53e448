//! Error statistics over combinations of candidate words.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};

use braid_circuits::GateCircuit;
use fusion_basis::BraidWord;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use su2_compile::SearchResult;

use crate::score::score_gate;
use crate::{ReportError, Result};

pub const DEFAULT_TOP_K: usize = 32;

/// Candidate words for one role, best first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RolePool {
    pub role: String,
    pub candidates: Vec<(BraidWord, f64)>,
}

impl RolePool {
    pub fn single(role: &str, word: BraidWord, error: f64) -> Self {
        Self { role: role.to_string(), candidates: vec![(word, error)] }
    }

    pub fn from_search(role: &str, r: &SearchResult) -> Self {
        Self {
            role: role.to_string(),
            candidates: r.candidates.iter().map(|c| (c.word.clone(), c.error)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub min: f64,
    pub avg: f64,
    pub max: f64,
}

impl Summary {
    fn of(v: &[f64]) -> Self {
        let min = v.iter().copied().fold(f64::INFINITY, f64::min);
        let max = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Self { min, avg: v.iter().sum::<f64>() / v.len() as f64, max }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Statistics {
    pub combinations: usize,
    pub overall: Summary,
    pub target: Summary,
    pub leakage: Summary,
}

#[derive(PartialEq)]
struct Entry(f64, Vec<usize>);

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, o: &Self) -> Ordering {
        // Reversed so the heap pops the smallest summed error.
        o.0.total_cmp(&self.0).then_with(|| o.1.cmp(&self.1))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// The `k` index tuples with the smallest summed standalone error, in order.
pub fn best_combinations(errors: &[Vec<f64>], k: usize) -> Vec<Vec<usize>> {
    if errors.iter().any(|e| e.is_empty()) {
        return Vec::new();
    }
    let total = |ix: &[usize]| ix.iter().zip(errors).map(|(&i, e)| e[i]).sum::<f64>();
    let start = vec![0; errors.len()];
    let mut heap = BinaryHeap::from([Entry(total(&start), start.clone())]);
    let mut seen = HashSet::from([start]);
    let mut out = Vec::with_capacity(k);
    while out.len() < k {
        let Some(Entry(_, ix)) = heap.pop() else { break };
        for r in 0..ix.len() {
            if ix[r] + 1 < errors[r].len() {
                let mut next = ix.clone();
                next[r] += 1;
                if seen.insert(next.clone()) {
                    heap.push(Entry(total(&next), next));
                }
            }
        }
        out.push(ix);
    }
    out
}

/// Score the `top_k` best combinations (each pool cut to `top_k` words).
pub fn combination_statistics<F>(pools: &[RolePool], top_k: usize, build: F) -> Result<Statistics>
where
    F: Fn(&[BraidWord]) -> Result<GateCircuit> + Sync,
{
    if top_k == 0 {
        return Err(ReportError::InvalidInput("top_k must be positive".into()));
    }
    let errors: Vec<Vec<f64>> = pools
        .iter()
        .map(|p| p.candidates.iter().take(top_k).map(|c| c.1).collect())
        .collect();
    let combos = best_combinations(&errors, top_k);
    if combos.is_empty() {
        return Err(ReportError::InvalidInput("every role needs at least one candidate".into()));
    }
    let scores = combos
        .par_iter()
        .map(|ix| {
            let words: Vec<BraidWord> = ix.iter().zip(pools).map(|(&i, p)| p.candidates[i].0.clone()).collect();
            score_gate(&build(&words)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let pick = |f: &dyn Fn(&crate::GateScore) -> f64| scores.iter().map(f).collect::<Vec<_>>();
    Ok(Statistics {
        combinations: scores.len(),
        overall: Summary::of(&pick(&|s| s.overall_error)),
        target: Summary::of(&pick(&|s| s.target_error())),
        leakage: Summary::of(&pick(&|s| s.leakage)),
    })
}
