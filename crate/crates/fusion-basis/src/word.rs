use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{BasisError, Result};

/// One printed factor `σ_generator^power`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub generator: usize,
    pub power: i32,
}

impl Factor {
    pub fn new(generator: usize, power: i32) -> Self {
        Self { generator, power }
    }

    pub fn inverse(self) -> Self {
        Self { generator: self.generator, power: -self.power }
    }
}

/// How a printed word maps onto the order in which its factors act.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum ReadingOrder {
    /// The word's matrix is the printed product: the leftmost printed factor
    /// is the leftmost matrix factor and therefore acts last.
    #[default]
    PrintedLeftLast,
    /// The leftmost printed factor acts first (matrix product reversed).
    PrintedLeftFirst,
}

impl ReadingOrder {
    pub const ALL: [ReadingOrder; 2] = [ReadingOrder::PrintedLeftLast, ReadingOrder::PrintedLeftFirst];

    /// Factors in the order they act on states.
    pub fn time_order(self, word: &BraidWord) -> Vec<Factor> {
        match self {
            ReadingOrder::PrintedLeftLast => word.factors.iter().rev().copied().collect(),
            ReadingOrder::PrintedLeftFirst => word.factors.clone(),
        }
    }

    /// Inverse of [`ReadingOrder::time_order`].
    pub fn printed_from_time(self, factors: Vec<Factor>) -> BraidWord {
        let mut factors = factors;
        if self == ReadingOrder::PrintedLeftLast {
            factors.reverse();
        }
        BraidWord { factors }
    }
}

impl fmt::Display for ReadingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReadingOrder::PrintedLeftLast => write!(f, "printed-left-last"),
            ReadingOrder::PrintedLeftFirst => write!(f, "printed-left-first"),
        }
    }
}

/// Ordered list of signed generator powers, kept in printed form.
///
/// Adjacent factors with the same generator are not merged automatically,
/// since published words print them separately; [`BraidWord::normalize`]
/// produces the merged form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BraidWord {
    factors: Vec<Factor>,
}

impl BraidWord {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        for f in &factors {
            if f.generator == 0 {
                return Err(BasisError::Parse("generator indices are 1-based".into()));
            }
            if f.power == 0 {
                return Err(BasisError::Parse(format!("zero power on s{}", f.generator)));
            }
        }
        Ok(Self { factors })
    }

    pub fn from_pairs(pairs: &[(usize, i32)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(g, p)| Factor::new(g, p)).collect())
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Braid length `Σ |power|`.
    pub fn length(&self) -> usize {
        self.factors.iter().map(|f| f.power.unsigned_abs() as usize).sum()
    }

    /// Winding number `Σ power`.
    pub fn winding(&self) -> i64 {
        self.factors.iter().map(|f| f.power as i64).sum()
    }

    pub fn max_generator(&self) -> usize {
        self.factors.iter().map(|f| f.generator).max().unwrap_or(0)
    }

    /// Merge equal-index neighbours and drop zero powers.
    pub fn normalize(&self) -> Self {
        let mut out: Vec<Factor> = Vec::with_capacity(self.factors.len());
        for &f in &self.factors {
            match out.last_mut() {
                Some(last) if last.generator == f.generator => {
                    last.power += f.power;
                    if last.power == 0 {
                        out.pop();
                    }
                }
                _ => out.push(f),
            }
        }
        Self { factors: out }
    }

    /// Word of the inverse braid: reversed with negated powers.
    pub fn inverse(&self) -> Self {
        Self { factors: self.factors.iter().rev().map(|f| f.inverse()).collect() }
    }

    pub fn map_generators(&self, f: impl Fn(usize) -> usize) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .map(|x| Factor::new(f(x.generator), x.power))
                .collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self { factors }
    }

    /// Elementary signed crossings in acting order, each power unrolled.
    pub fn crossings(&self, order: ReadingOrder) -> Vec<(usize, bool)> {
        let mut out = Vec::with_capacity(self.length());
        for f in order.time_order(self) {
            for _ in 0..f.power.unsigned_abs() {
                out.push((f.generator, f.power > 0));
            }
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}^{}", x.generator, x.power)?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BasisError;

    /// Grammar: `term (ws term)*`, `term := 's' digit+ '^' sign? digit+`.
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for term in s.split_whitespace() {
            let bad = || BasisError::Parse(format!("bad term '{term}'"));
            let rest = term.strip_prefix('s').ok_or_else(bad)?;
            let (g, p) = rest.split_once('^').ok_or_else(bad)?;
            if g.is_empty() || !g.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let digits = p.strip_prefix(['-', '+']).unwrap_or(p);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let generator = g.parse::<usize>().map_err(|_| bad())?;
            let power = p.parse::<i32>().map_err(|_| bad())?;
            factors.push(Factor::new(generator, power));
        }
        BraidWord::new(factors)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
