//! Brute-force weave search with Γ-similarity and Hermitian pruning.
//!
//! A candidate is `[adjuster] body [adjuster]`: the body alternates
//! generators with powers from a fixed alphabet, adjusters are `σ^{±1}`.
//! Every candidate gets a global rank in a fixed-radix numbering; shard
//! `(k, N)` owns the ranks `≡ k (mod N)`.

use std::cmp::Ordering;

use fib_core::Handedness;
use fusion_basis::{BraidWord, Factor, ReadingOrder, UnitaryMatrix};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::gates::is_hermitian;
use crate::{gamma_word, tau_matrix, CompileError, Quaternion, Result, Su2Evaluator};

const WEAVE_POWERS: [i32; 4] = [-4, -2, 2, 4];
const BRAID_POWERS: [i32; 8] = [-4, -3, -2, -1, 1, 2, 3, 4];
const HERMITIAN_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Endpoint {
    /// The weft returns to its starting strand (identity permutation).
    SameStrand,
    /// The weft ends on the opposite outer strand (a 3-cycle).
    TopToBottom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shard {
    pub index: usize,
    pub total: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, total: 1 };
}

impl std::str::FromStr for Shard {
    type Err = CompileError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || CompileError::InvalidInput(format!("shard '{s}' is not k/N"));
        let (k, n) = s.split_once('/').ok_or_else(bad)?;
        let shard = Shard {
            index: k.trim().parse().map_err(|_| bad())?,
            total: n.trim().parse().map_err(|_| bad())?,
        };
        if shard.total == 0 || shard.index >= shard.total {
            return Err(bad());
        }
        Ok(shard)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeaveSearchSpec {
    pub target: UnitaryMatrix,
    pub length_budget: usize,
    pub endpoint: Endpoint,
    pub weave_only: bool,
    pub shard: Shard,
    pub top_k: usize,
    pub handedness: Handedness,
    /// Apply the Γ-similarity and Hermitian pruning rules.
    #[serde(default = "default_true")]
    pub pruned: bool,
}

fn default_true() -> bool {
    true
}

impl WeaveSearchSpec {
    pub fn new(target: UnitaryMatrix, length_budget: usize, endpoint: Endpoint) -> Self {
        Self {
            target,
            length_budget,
            endpoint,
            weave_only: true,
            shard: Shard::WHOLE,
            top_k: 8,
            handedness: Handedness::Right,
            pruned: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.target.dim() != 2 || !self.target.is_unitary(1e-9) {
            return Err(CompileError::InvalidInput("target must be a 2×2 unitary".into()));
        }
        if self.length_budget == 0 {
            return Err(CompileError::InvalidInput("length budget must be at least 1".into()));
        }
        if self.shard.total == 0 || self.shard.index >= self.shard.total {
            return Err(CompileError::InvalidInput("shard index must satisfy 0 ≤ k < N".into()));
        }
        if self.top_k == 0 {
            return Err(CompileError::InvalidInput("top_k must be at least 1".into()));
        }
        let minimum = match (self.endpoint, self.weave_only) {
            (Endpoint::TopToBottom, true) => 4,
            _ => 2,
        };
        if self.length_budget < minimum {
            return Err(CompileError::Infeasible(format!(
                "budget {} below the shortest {:?} word (length {minimum})",
                self.length_budget, self.endpoint
            )));
        }
        Ok(())
    }

    /// SHA-256 of the canonical JSON encoding with the shard removed.
    pub fn fingerprint(&self) -> String {
        let mut canon = self.clone();
        canon.shard = Shard::WHOLE;
        let json = serde_json::to_string(&canon).expect("spec serialization cannot fail");
        Sha256::digest(json.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub word: BraidWord,
    pub error: f64,
    pub winding: i64,
}

impl Candidate {
    fn new(word: BraidWord, error: f64) -> Self {
        let winding = word.winding();
        Self { word, error, winding }
    }

    pub fn rank_cmp(&self, o: &Self) -> Ordering {
        self.error
            .total_cmp(&o.error)
            .then(self.word.length().cmp(&o.word.length()))
            .then_with(|| self.word.cmp(&o.word))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub fingerprint: String,
    pub candidates: Vec<Candidate>,
    pub enumerated_count: u64,
}

impl SearchResult {
    pub fn best(&self) -> Option<&Candidate> {
        self.candidates.first()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| CompileError::InvalidInput(e.to_string()))
    }
}

/// Bounded, sorted candidate list.
#[derive(Debug, Clone, Default)]
struct TopK {
    k: usize,
    items: Vec<Candidate>,
}

impl TopK {
    fn new(k: usize) -> Self {
        Self { k, items: Vec::with_capacity(k + 1) }
    }

    fn push(&mut self, c: Candidate) {
        if self.items.len() == self.k {
            if let Some(last) = self.items.last() {
                if c.rank_cmp(last) != Ordering::Less {
                    return;
                }
            }
        }
        let pos = self
            .items
            .binary_search_by(|x| x.rank_cmp(&c))
            .unwrap_or_else(|p| p);
        if self.items.get(pos).is_some_and(|x| x.word == c.word) {
            return;
        }
        self.items.insert(pos, c);
        self.items.truncate(self.k);
    }

    fn merge(mut self, other: TopK) -> TopK {
        for c in other.items {
            self.push(c);
        }
        self
    }
}

/// Adjuster choice: none, or (prefix generator, prefix sign, suffix generator, suffix sign).
type Adjusters = Option<(usize, i32, usize, i32)>;

const ADJUSTER_CHOICES: usize = 17;

fn adjusters(code: usize) -> Adjusters {
    if code == 0 {
        return None;
    }
    let c = code - 1;
    let sign = |b: usize| if b == 0 { 1 } else { -1 };
    Some((1 + (c & 1), sign((c >> 1) & 1), 1 + ((c >> 2) & 1), sign((c >> 3) & 1)))
}

/// Layout of the candidate space for one spec.
struct Space {
    powers: &'static [i32],
    first_choices: usize,
    adjuster_choices: usize,
    /// `(body_len, offset, count)` per body length.
    blocks: Vec<(usize, u64, u64)>,
    total: u64,
}

impl Space {
    fn new(spec: &WeaveSearchSpec) -> Self {
        let powers: &'static [i32] = if spec.weave_only { &WEAVE_POWERS } else { &BRAID_POWERS };
        let first_choices = if spec.pruned { 1 } else { 2 };
        let adjuster_choices = if spec.weave_only { ADJUSTER_CHOICES } else { 1 };
        let min_power = powers.iter().map(|p| p.unsigned_abs() as usize).min().unwrap_or(1);
        let max_body = spec.length_budget / min_power;
        let mut blocks = Vec::new();
        let mut offset = 0u64;
        for m in 1..=max_body {
            let count = (first_choices * adjuster_choices) as u64 * (powers.len() as u64).pow(m as u32);
            blocks.push((m, offset, count));
            offset += count;
        }
        Self { powers, first_choices, adjuster_choices, blocks, total: offset }
    }

    /// Word at `rank`, or `None` when it exceeds the budget or misses the endpoint.
    fn decode(&self, rank: u64, spec: &WeaveSearchSpec) -> Option<BraidWord> {
        let idx = self.blocks.partition_point(|b| b.1 + b.2 <= rank);
        let (m, offset, _) = self.blocks[idx];
        let mut rem = rank - offset;
        let adj = adjusters((rem % self.adjuster_choices as u64) as usize);
        rem /= self.adjuster_choices as u64;
        let first = 1 + (rem % self.first_choices as u64) as usize;
        rem /= self.first_choices as u64;
        let base = self.powers.len() as u64;
        let mut factors = Vec::with_capacity(m + 2);
        let mut len = 0usize;
        if let Some((g, s, _, _)) = adj {
            factors.push(Factor::new(g, s));
            len += 1;
        }
        for k in 0..m {
            let p = self.powers[(rem % base) as usize];
            rem /= base;
            let g = if k % 2 == 0 { first } else { 3 - first };
            factors.push(Factor::new(g, p));
            len += p.unsigned_abs() as usize;
        }
        if let Some((_, _, g, s)) = adj {
            factors.push(Factor::new(g, s));
            len += 1;
        }
        if len > spec.length_budget {
            return None;
        }
        let word = BraidWord::new(factors).ok()?;
        (endpoint_of(&word) == spec.endpoint).then_some(word)
    }
}

/// Endpoint class from the induced permutation of three strands.
pub fn endpoint_of(word: &BraidWord) -> Endpoint {
    let mut perm = [0usize, 1, 2];
    for f in word.factors() {
        if f.power % 2 != 0 {
            perm.swap(f.generator - 1, f.generator);
        }
    }
    if perm == [0, 1, 2] {
        Endpoint::SameStrand
    } else {
        Endpoint::TopToBottom
    }
}

fn swap_indices(w: &BraidWord) -> BraidWord {
    w.map_generators(|g| 3 - g)
}

fn first_body_generator(w: &BraidWord) -> usize {
    // Adjusters have |power| = 1 and body powers are even in weave mode;
    // in braid mode there are no adjusters and the first factor is the body.
    w.factors()
        .iter()
        .find(|f| f.power.abs() != 1)
        .or_else(|| w.factors().first())
        .map(|f| f.generator)
        .unwrap_or(1)
}

/// Representative of `w` in the rule-(a) canonical set (first body factor on σ_1).
fn canonical_rep(w: &BraidWord, weave_only: bool) -> BraidWord {
    let first = if weave_only {
        first_body_generator(w)
    } else {
        w.factors().first().map(|f| f.generator).unwrap_or(1)
    };
    if first == 1 {
        w.clone()
    } else {
        swap_indices(w)
    }
}

pub fn search(spec: &WeaveSearchSpec) -> Result<SearchResult> {
    spec.validate()?;
    let eval = Su2Evaluator::new(spec.handedness, ReadingOrder::PrintedLeftLast)?;
    let target = Quaternion::from_unitary(&spec.target)?;
    let gamma = tau_matrix(&gamma_word(), spec.handedness, ReadingOrder::PrintedLeftLast)?;
    let swapped_target = Quaternion::from_unitary(&gamma.matmul(&spec.target).matmul(&gamma.adjoint()))?;
    let hermitian = spec.pruned && is_hermitian(&spec.target, HERMITIAN_TOL);
    let space = Space::new(spec);
    let (k, n) = (spec.shard.index as u64, spec.shard.total as u64);
    let local = if space.total > k { (space.total - k).div_ceil(n) } else { 0 };

    let (top, count) = (0..local)
        .into_par_iter()
        .fold(
            || (TopK::new(spec.top_k), 0u64),
            |(mut top, mut count), j| {
                let rank = k + j * n;
                let Some(word) = space.decode(rank, spec) else {
                    return (top, count);
                };
                if !spec.pruned {
                    count += 1;
                    let e = eval.raw(&word).distance(&target);
                    top.push(Candidate::new(word, e));
                    return (top, count);
                }
                let inverse = word.inverse();
                let partner = canonical_rep(&inverse, spec.weave_only);
                if hermitian && partner < word {
                    return (top, count);
                }
                count += 1;
                let q = eval.raw(&word);
                let e1 = q.distance(&target);
                let e2 = q.distance(&swapped_target);
                top.push(Candidate::new(swap_indices(&word), e2));
                if hermitian && partner != word {
                    top.push(Candidate::new(swap_indices(&inverse), e2));
                    top.push(Candidate::new(inverse, e1));
                }
                top.push(Candidate::new(word, e1));
                (top, count)
            },
        )
        .reduce(|| (TopK::new(spec.top_k), 0), |a, b| (a.0.merge(b.0), a.1 + b.1));

    Ok(SearchResult { fingerprint: spec.fingerprint(), candidates: top.items, enumerated_count: count })
}

/// Global top-k over shard results of one spec.
pub fn merge(results: &[SearchResult], top_k: usize) -> Result<SearchResult> {
    let first = results
        .first()
        .ok_or_else(|| CompileError::InvalidInput("nothing to merge".into()))?;
    if results.iter().any(|r| r.fingerprint != first.fingerprint) {
        return Err(CompileError::InvalidInput("spec fingerprints differ".into()));
    }
    let mut top = TopK::new(top_k.max(1));
    let mut count = 0;
    for r in results {
        count += r.enumerated_count;
        for c in &r.candidates {
            top.push(c.clone());
        }
    }
    Ok(SearchResult { fingerprint: first.fingerprint.clone(), candidates: top.items, enumerated_count: count })
}
