//! Affine cactus groups `AJ_n` and their relatives, made computable.
//!
//! Elements are words in involutions `σ_{i,j}` indexed by circular intervals of strands on a
//! cylinder. Each word is sent to a pair made of a word in a right-angled Coxeter group and an
//! affine permutation; this map is injective, so equality, purity and torsion orders all reduce
//! to geodesic rewriting in a right-angled Coxeter group.
//!
//! ```
//! use cactus::CactusWord;
//!
//! let lhs: CactusWord = CactusWord::parse(3, "s(1,2) s(1,3)").unwrap();
//! let rhs: CactusWord = CactusWord::parse(3, "s(1,3) s(2,3)").unwrap();
//! assert!(lhs.equals(&rhs).unwrap());
//! assert_eq!(CactusWord::parse(2, "s(1,2) s(2,1)").unwrap().order().to_string(), "infinite");
//! ```

pub mod affine_cactus;
pub mod circular;
pub mod coxeter_cactus;
pub mod error;
pub mod matrix;
pub mod perm;
pub mod presentation;
pub mod racg;
pub mod selftest;

pub use affine_cactus::{CactusLetter, CactusWord, ClassicCactusWord, Order, SemidirectElement};
pub use circular::{CircularInterval, CircularSet, LiftedSet};
pub use error::{Error, Result};
pub use perm::{AffinePermutation, Permutation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/word-problem.md")]
    mod word_problem {}
    #[doc = include_str!("../../../book/src/torsion.md")]
    mod torsion {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/coxeter.md")]
    mod coxeter {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
