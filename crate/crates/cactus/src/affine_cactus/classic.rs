//! The classical cactus group `J_n` and its embedding into the diagram group of plain subsets.

use super::word::{CactusWord, ClassicCactusWord};
use crate::error::{Error, Result};
use crate::perm::{check_n, interval_reversal, Permutation};
use crate::racg::{CommutationGraph, FiniteAlphabet, Racg, RacgWord};

/// Subsets of `{1..n}` stored sorted; two commute when disjoint or nested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetGraph {
    pub n: usize,
}

pub type Subset = Vec<usize>;

fn nested(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_err())
}

impl CommutationGraph for SubsetGraph {
    type Letter = Subset;

    fn commutes(&self, a: &Subset, b: &Subset) -> bool {
        disjoint(a, b) || nested(a, b) || nested(b, a)
    }

    fn contains(&self, a: &Subset) -> bool {
        !a.is_empty() && a.windows(2).all(|w| w[0] < w[1]) && a.iter().all(|&x| x >= 1 && x <= self.n)
    }
}

impl SubsetGraph {
    /// All subsets with at least `min_size` elements, ordered by size then lexicographically.
    pub fn alphabet(&self, min_size: usize) -> Result<FiniteAlphabet<Subset>> {
        check_n(self.n, 1)?;
        if min_size == 0 || min_size > self.n {
            return Err(Error::Parameter(format!(
                "min_size {min_size} for n = {}",
                self.n
            )));
        }
        let mut sets = Vec::new();
        for mask in 1u64..(1u64 << self.n) {
            if mask.count_ones() as usize >= min_size {
                sets.push(
                    (1..=self.n)
                        .filter(|&p| mask >> (p - 1) & 1 == 1)
                        .collect::<Subset>(),
                );
            }
        }
        sets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let g = *self;
        FiniteAlphabet::new(sets, move |a, b| g.commutes(a, b))
    }
}

/// `ψ(w)`: diagram part over plain subsets together with the permutation `π(w)`.
pub fn psi(w: &ClassicCactusWord) -> (RacgWord<Subset>, Permutation) {
    let n = w.n();
    let mut s = Permutation::identity(n);
    let mut diagram = Vec::with_capacity(w.len());
    for &(i, j) in w.letters() {
        let mut image: Subset = (i..=j).map(|p| s.apply(p)).collect();
        image.sort_unstable();
        diagram.push(image);
        s = s
            .compose(&interval_reversal(n, i, j).expect("checked letter"))
            .expect("same strand count");
    }
    (diagram, s)
}

impl ClassicCactusWord {
    pub fn is_identity(&self) -> bool {
        let (diagram, s) = psi(self);
        let trivial = Racg::new(SubsetGraph { n: self.n() }).is_identity(&diagram);
        assert!(
            !trivial || s.is_identity(),
            "trivial diagram part with permutation {s}"
        );
        trivial
    }

    /// Word problem in `J_n`.
    pub fn equals(&self, other: &ClassicCactusWord) -> Result<bool> {
        Ok(self.concat(&other.inverse())?.is_identity())
    }
}

/// The letterwise map `J_n → AJ_n`.
pub fn embed_classic(w: &ClassicCactusWord) -> CactusWord {
    w.embed()
}

pub fn equal_classic(w1: &ClassicCactusWord, w2: &ClassicCactusWord) -> Result<bool> {
    w1.equals(w2)
}
