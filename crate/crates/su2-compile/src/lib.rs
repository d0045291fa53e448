//! Single-qubit compilation on three Fibonacci anyons.

mod error;
pub mod gates;
mod metric;
mod quaternion;
pub mod search;

pub use error::CompileError;
pub use fusion_basis::{BraidWord, Factor, ReadingOrder, UnitaryMatrix};
pub use metric::{distance, leakage, max_singular_value, min_gram_eigenvalue};
pub use quaternion::{su2_block, Quaternion, Su2Evaluator};
pub use search::{merge, search, Candidate, Endpoint, SearchResult, Shard, WeaveSearchSpec};

use fib_core::Handedness;
use fusion_basis::{representation, AnyonCharge};

pub type Result<T> = std::result::Result<T, CompileError>;

/// Braid length `Σ |power|`.
pub fn length(word: &BraidWord) -> usize {
    word.length()
}

/// Winding number `W = Σ power`.
pub fn winding(word: &BraidWord) -> i64 {
    word.winding()
}

/// Swap σ_1 and σ_2. The result's matrix is `Γ†·M·Γ` with `Γ = σ_1σ_2σ_1`.
pub fn gamma_conjugate(word: &BraidWord) -> Result<BraidWord> {
    if word.max_generator() > 2 {
        return Err(CompileError::InvalidInput("Γ-conjugation needs a three-strand word".into()));
    }
    Ok(word.map_generators(|g| 3 - g))
}

pub fn gamma_word() -> BraidWord {
    BraidWord::from_pairs(&[(1, 1), (2, 1), (1, 1)]).expect("static word")
}

/// Matrix of a word on the τ sector of three anyons.
pub fn tau_matrix(word: &BraidWord, handedness: Handedness, order: ReadingOrder) -> Result<UnitaryMatrix> {
    Ok(representation(3, AnyonCharge::Tau, handedness)?.word_matrix(word, order)?)
}

/// Scalar the word contributes on the vacuum sector of three anyons.
pub fn vacuum_phase(word: &BraidWord, handedness: Handedness, order: ReadingOrder) -> Result<fib_core::C64> {
    Ok(representation(3, AnyonCharge::Vacuum, handedness)?.word_matrix(word, order)?.get(0, 0))
}

/// Error of a standalone three-anyon word against a 2×2 target.
pub fn word_error(word: &BraidWord, target: &UnitaryMatrix, handedness: Handedness, order: ReadingOrder) -> Result<f64> {
    distance(&tau_matrix(word, handedness, order)?, target)
}
