//! Words in the affine cactus group `AJ_n`, the embedding `φ` and everything decided through it.

mod classic;
mod relations;
pub mod rep;
mod semidirect;
mod structure;
mod word;
mod word_problem;

pub use classic::{embed_classic, equal_classic, psi, Subset, SubsetGraph};
pub use relations::{classic_relations, defining_relations, generators, RelationKind};
pub use semidirect::{LiftedGraph, SemidirectElement};
pub use word::{CactusLetter, CactusWord, ClassicCactusWord};
pub use word_problem::Order;

/// Diagram alphabet of `AJ_n`: circular sets with at least `min_size` strands, with their
/// commutation relation.
pub fn circular_alphabet(
    n: usize,
    min_size: usize,
) -> crate::Result<crate::racg::FiniteAlphabet<crate::CircularSet>> {
    let sets = crate::CircularSet::enumerate(n, min_size)?;
    crate::racg::FiniteAlphabet::new(sets, |a, b| a.commute_ad(b).unwrap_or(false))
}

#[cfg(test)]
mod tests;
