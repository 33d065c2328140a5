use std::fmt;

use super::word::{CactusLetter, CactusWord};
use crate::circular::LiftedSet;
use crate::error::{Error, Result};
use crate::perm::{AffinePermutation, Permutation};
use crate::racg::{CommutationGraph, Racg, RacgWord};

/// Commutation graph on lifted sets with `n` residues: two sets commute when their residues are
/// disjoint or one fits inside a translate of the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftedGraph {
    pub n: usize,
}

impl CommutationGraph for LiftedGraph {
    type Letter = LiftedSet;

    fn commutes(&self, a: &LiftedSet, b: &LiftedSet) -> bool {
        a.commutes_with(b)
    }

    fn contains(&self, a: &LiftedSet) -> bool {
        a.n() == self.n
    }
}

/// An element of the semidirect product of the diagram group with the affine permutations.
///
/// The product is `(τ₁, g₁)·(τ₂, g₂) = (τ₁ · g₁(τ₂), g₁g₂)`, where `g₁` moves every letter of `τ₂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemidirectElement {
    diagram: RacgWord<LiftedSet>,
    affine: AffinePermutation,
}

impl SemidirectElement {
    pub fn identity(n: usize) -> Self {
        SemidirectElement {
            diagram: Vec::new(),
            affine: AffinePermutation::identity(n),
        }
    }

    /// Image `(τ_{[i,j]_c}, s_{i,j})` of a generator.
    pub fn generator(n: usize, letter: CactusLetter) -> Result<Self> {
        letter.check(n)?;
        Ok(SemidirectElement {
            diagram: vec![letter.lifted_support(n)],
            affine: letter.affine_reversal(n),
        })
    }

    pub fn n(&self) -> usize {
        self.affine.n()
    }

    pub fn diagram_part(&self) -> &[LiftedSet] {
        &self.diagram
    }

    pub fn affine_part(&self) -> &AffinePermutation {
        &self.affine
    }

    /// The permutation of the strands, `π` of any word representing this element.
    pub fn perm_part(&self) -> Permutation {
        self.affine.projection()
    }

    pub fn mul(&self, other: &SemidirectElement) -> Result<SemidirectElement> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let mut diagram = self.diagram.clone();
        diagram.extend(other.diagram.iter().map(|d| d.act(&self.affine)));
        Ok(SemidirectElement {
            diagram,
            affine: self.affine.compose(&other.affine)?,
        })
    }

    fn racg(&self) -> Racg<LiftedGraph> {
        Racg::new(LiftedGraph { n: self.n() })
    }

    /// Same element with a geodesic diagram part.
    pub fn reduced(&self) -> SemidirectElement {
        SemidirectElement {
            diagram: self.racg().reduce(&self.diagram),
            affine: self.affine.clone(),
        }
    }

    /// Canonical form: lexicographically least geodesic diagram part.
    pub fn normal_form(&self) -> SemidirectElement {
        SemidirectElement {
            diagram: self.racg().normal_form(&self.diagram),
            affine: self.affine.clone(),
        }
    }

    /// True iff the element is trivial. A trivial diagram part forces a trivial affine part.
    pub fn is_identity(&self) -> bool {
        let trivial = self.racg().is_identity(&self.diagram);
        assert!(
            !trivial || self.affine.is_identity(),
            "diagram part reduces to the empty word but the affine part is {}",
            self.affine
        );
        trivial
    }

    /// Equality as group elements.
    pub fn same_element(&self, other: &SemidirectElement) -> bool {
        self.affine == other.affine && self.normal_form().diagram == other.normal_form().diagram
    }
}

impl fmt::Display for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, d) in self.diagram.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            d.fmt(f)?;
        }
        write!(f, "] {}", self.affine)
    }
}

impl CactusWord {
    /// `φ(w)`: the `r`-th diagram letter is the support of the `r`-th letter moved by the
    /// product of the reversals before it.
    ///
    /// ```
    /// use cactus::CactusWord;
    /// let w = CactusWord::parse(4, "s(1,2) s(3,1) s(2,3)").unwrap();
    /// assert_eq!(w.phi().to_string(), "[(1,2), (3,4,2), {1,6}] [-1,6,1,4]");
    /// ```
    pub fn phi(&self) -> SemidirectElement {
        let n = self.n();
        let mut affine = AffinePermutation::identity(n);
        let mut diagram = Vec::with_capacity(self.len());
        for l in self.letters() {
            diagram.push(l.lifted_support(n).act(&affine));
            affine = affine.compose(&l.affine_reversal(n)).expect("same strand count");
        }
        SemidirectElement { diagram, affine }
    }

    /// `π(w)`: product of the interval reversals in letter order.
    pub fn pi(&self) -> Permutation {
        let n = self.n();
        self.letters().iter().fold(Permutation::identity(n), |acc, l| {
            acc.compose(&l.reversal(n)).expect("same strand count")
        })
    }

    pub fn is_pure(&self) -> bool {
        self.pi().is_identity()
    }
}
