use fusion_basis::{BraidWord, Factor, ReadingOrder};
use serde::{Deserialize, Serialize};

use crate::{CircuitError, Result};

/// Anyons per macro-strand, listed top-down.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrandComposition {
    widths: Vec<usize>,
}

impl StrandComposition {
    pub fn new(widths: Vec<usize>) -> Result<Self> {
        if widths.is_empty() || widths.contains(&0) {
            return Err(CircuitError::InvalidInput(format!("bad composition {widths:?}")));
        }
        Ok(Self { widths })
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn strands(&self) -> usize {
        self.widths.len()
    }

    pub fn total(&self) -> usize {
        self.widths.iter().sum()
    }
}

impl TryFrom<Vec<usize>> for StrandComposition {
    type Error = CircuitError;
    fn try_from(w: Vec<usize>) -> Result<Self> {
        Self::new(w)
    }
}

impl From<StrandComposition> for Vec<usize> {
    fn from(c: StrandComposition) -> Self {
        c.widths
    }
}

/// One positive or negative crossing of a cable of `a` anyons starting at
/// anyon `start` with the cable of `b` anyons just below it. Every strand of
/// one cable crosses every strand of the other once. Crossings are listed in
/// the order they act.
pub fn macro_crossing(start: usize, a: usize, b: usize, positive: bool) -> Vec<(usize, bool)> {
    if positive {
        let mut seq = Vec::with_capacity(a * b);
        for k in (0..a).rev() {
            for j in 0..b {
                seq.push((start + k + j, true));
            }
        }
        seq
    } else {
        macro_crossing(start, b, a, true)
            .into_iter()
            .rev()
            .map(|(g, _)| (g, false))
            .collect()
    }
}

/// Expand macro factors, given in acting order, into elementary crossings.
/// The first macro-strand begins at anyon `start`; widths follow the strands
/// as they move.
pub fn expand(factors: &[Factor], start: usize, composition: &StrandComposition) -> Result<Vec<(usize, bool)>> {
    let mut widths = composition.widths.clone();
    let mut out = Vec::new();
    for f in factors {
        let i = f.generator;
        if i == 0 || i >= widths.len() {
            return Err(CircuitError::InvalidInput(format!(
                "macro generator s{i} needs more than {} strands",
                widths.len()
            )));
        }
        let s = start + widths[..i - 1].iter().sum::<usize>();
        for _ in 0..f.power.unsigned_abs() {
            out.extend(macro_crossing(s, widths[i - 1], widths[i], f.power > 0));
            widths.swap(i - 1, i);
        }
    }
    Ok(out)
}

/// Elementary word for a macro word on the given composition, anyon 1 at
/// the top of the first macro-strand. Printed in the same reading order.
pub fn cable(word: &BraidWord, composition: &StrandComposition, order: ReadingOrder) -> Result<BraidWord> {
    let crossings = expand(&order.time_order(word), 1, composition)?;
    let factors = crossings
        .into_iter()
        .map(|(g, p)| Factor::new(g, if p { 1 } else { -1 }))
        .collect();
    Ok(order.printed_from_time(factors))
}

/// Layer count when every crossing is scheduled as early as its two
/// strands allow.
pub fn asap_depth(crossings: &[(usize, bool)]) -> usize {
    let mut ready: Vec<usize> = Vec::new();
    let mut depth = 0;
    for &(g, _) in crossings {
        if ready.len() <= g + 1 {
            ready.resize(g + 2, 0);
        }
        let layer = ready[g].max(ready[g + 1]) + 1;
        ready[g] = layer;
        ready[g + 1] = layer;
        depth = depth.max(layer);
    }
    depth
}
