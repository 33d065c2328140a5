//! Exact integer matrices attached to elements of `AJ_n`.

use num_bigint::BigInt;

use super::semidirect::{LiftedGraph, SemidirectElement};
use super::word::CactusWord;
use crate::circular::LiftedSet;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::perm::AffinePermutation;
use crate::racg::GeometricRep;

/// The `(n+1)×(n+1)` matrix sending `e_p` to `e_{π(p)} + t_p e_0`, where `f(p) = π(p) + n t_p`.
///
/// This is a faithful representation of the affine permutations.
pub fn affine_matrix(f: &AffinePermutation) -> IntMatrix {
    let n = f.n();
    let mut m = IntMatrix::identity(n + 1);
    let pi = f.projection();
    for (p, t) in (1..=n).zip(f.windings()) {
        m.set(p, p, BigInt::from(0));
        m.set(pi.apply(p), p, BigInt::from(1));
        m.set(0, p, BigInt::from(t));
    }
    m
}

/// Matrix images of words on a shared basis.
///
/// The diagram part of `φ` is sent through the geometric representation of the diagram group
/// restricted to the lifted sets occurring in the given words, and block-summed with the
/// affine matrix. Two words have equal images iff they are equal in `AJ_n`.
#[derive(Debug, Clone)]
pub struct MatrixOracle {
    n: usize,
    rep: GeometricRep<LiftedSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixImage {
    pub diagram: IntMatrix,
    pub affine: IntMatrix,
}

impl MatrixOracle {
    pub fn new<'a>(n: usize, words: impl IntoIterator<Item = &'a CactusWord>) -> Result<Self> {
        let mut basis = Vec::new();
        for w in words {
            if w.n() != n {
                return Err(Error::SizeMismatch(n, w.n()));
            }
            basis.extend(w.phi().diagram_part().iter().cloned());
        }
        basis.sort();
        basis.dedup();
        Ok(MatrixOracle {
            n,
            rep: GeometricRep::new(&LiftedGraph { n }, basis),
        })
    }

    pub fn basis(&self) -> &[LiftedSet] {
        self.rep.basis()
    }

    pub fn element_image(&self, e: &SemidirectElement) -> Result<MatrixImage> {
        Ok(MatrixImage {
            diagram: self.rep.rep_matrix(e.diagram_part())?,
            affine: affine_matrix(e.affine_part()),
        })
    }

    /// Fails if the word uses diagram letters outside the basis.
    pub fn image(&self, w: &CactusWord) -> Result<MatrixImage> {
        if w.n() != self.n {
            return Err(Error::SizeMismatch(self.n, w.n()));
        }
        self.element_image(&w.phi())
    }
}

/// Decides equality of two words by comparing their matrix images.
pub fn matrix_equal(w1: &CactusWord, w2: &CactusWord) -> Result<bool> {
    let oracle = MatrixOracle::new(w1.n(), [w1, w2])?;
    Ok(oracle.image(w1)? == oracle.image(w2)?)
}

/// Affine matrix of each generator `σ_{i,j}`, in generator order.
pub fn generator_affine_matrices(n: usize) -> Result<Vec<(super::word::CactusLetter, IntMatrix)>> {
    crate::perm::check_n(n, 2)?;
    Ok(super::relations::generators(n)
        .into_iter()
        .map(|l| (l, affine_matrix(&l.affine_reversal(n))))
        .collect())
}
