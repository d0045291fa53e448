//! Fusion-tree bases for `n` Fibonacci anyons and the matrices of the
//! elementary braid generators acting on them.

mod error;
mod generator;
mod matrix;
mod tree;
mod word;

pub use error::BasisError;
pub use generator::{braid_generator, representation, Representation, SparseGenerator};
pub use matrix::UnitaryMatrix;
pub use tree::{enumerate_basis, FusionBasis, FusionTree};
pub use word::{BraidWord, Factor, ReadingOrder};

pub use fib_core::{AnyonCharge, Handedness, C64};

pub type Result<T> = std::result::Result<T, BasisError>;

/// Matrix of `word` on `basis`, multiplied in the given reading order.
pub fn word_matrix(
    basis: &FusionBasis,
    word: &BraidWord,
    handedness: Handedness,
    order: ReadingOrder,
) -> Result<UnitaryMatrix> {
    let rep = representation(basis.n(), basis.sector(), handedness)?;
    rep.word_matrix(word, order)
}
