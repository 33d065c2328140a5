use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::CommutationGraph;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// The geometric representation of a right-angled Coxeter group on a finite set of generators.
///
/// `R_g(e_h) = e_h − 2B(g,h)e_g` with `B(g,g) = 1`, `B(g,h) = 0` for commuting pairs and `−1`
/// otherwise. It is faithful, so matrix equality decides equality of words over the basis.
#[derive(Debug, Clone)]
pub struct GeometricRep<L> {
    basis: Vec<L>,
    index: HashMap<L, usize>,
    /// `coupling[g][h] = −2B(g,h)` for `g ≠ h`.
    coupling: Vec<Vec<i64>>,
}

impl<L: Clone + Eq + std::hash::Hash + Ord + std::fmt::Debug> GeometricRep<L> {
    pub fn new<G: CommutationGraph<Letter = L>>(graph: &G, basis: Vec<L>) -> Self {
        let d = basis.len();
        let coupling = (0..d)
            .map(|g| {
                (0..d)
                    .map(|h| {
                        if g == h || graph.commutes(&basis[g], &basis[h]) {
                            0
                        } else {
                            2
                        }
                    })
                    .collect()
            })
            .collect();
        let index = basis.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
        GeometricRep {
            basis,
            index,
            coupling,
        }
    }

    pub fn basis(&self) -> &[L] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn slot(&self, g: &L) -> Result<usize> {
        self.index
            .get(g)
            .copied()
            .ok_or_else(|| Error::UnknownLetter(format!("{g:?}")))
    }

    pub fn generator_matrix(&self, g: &L) -> Result<IntMatrix> {
        let mut m = IntMatrix::identity(self.dim());
        self.right_multiply(&mut m, self.slot(g)?);
        Ok(m)
    }

    /// Product `R_{w_1} R_{w_2} ⋯`.
    pub fn rep_matrix(&self, w: &[L]) -> Result<IntMatrix> {
        let mut m = IntMatrix::identity(self.dim());
        for g in w {
            self.right_multiply(&mut m, self.slot(g)?);
        }
        Ok(m)
    }

    /// `m ← m·R_g`: column `h` gains `coupling[g][h]` times column `g`, then column `g` flips sign.
    fn right_multiply(&self, m: &mut IntMatrix, g: usize) {
        let d = self.dim();
        for r in 0..d {
            let mg = m.get(r, g).clone();
            if mg.is_zero() {
                continue;
            }
            for h in 0..d {
                let c = self.coupling[g][h];
                if c != 0 {
                    let v = m.get(r, h) + &mg * BigInt::from(c);
                    m.set(r, h, v);
                }
            }
            m.set(r, g, -mg);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::racg::FiniteAlphabet;

    #[test]
    fn small_examples() {
        let one = FiniteAlphabet::new(vec!['a'], |_, _| true).unwrap();
        let rep = one.geometric_rep();
        assert_eq!(
            rep.generator_matrix(&'a').unwrap(),
            IntMatrix::from_rows(vec![vec![-1]])
        );

        let c = FiniteAlphabet::new(vec!['a', 'b'], |_, _| true).unwrap();
        let rep = c.geometric_rep();
        let ra = rep.generator_matrix(&'a').unwrap();
        let rb = rep.generator_matrix(&'b').unwrap();
        assert_eq!(ra, IntMatrix::from_rows(vec![vec![-1, 0], vec![0, 1]]));
        assert_eq!(rb, IntMatrix::from_rows(vec![vec![1, 0], vec![0, -1]]));
        let ab = &ra * &rb;
        assert!(!ab.is_identity() && ab.pow(2).is_identity());

        let nc = FiniteAlphabet::new(vec!['a', 'b'], |_, _| false).unwrap();
        let rep = nc.geometric_rep();
        let ab = rep.rep_matrix(&['a', 'b']).unwrap();
        for m in 1..=20 {
            assert!(!ab.pow(m).is_identity());
        }
        assert_ne!(
            rep.rep_matrix(&['a', 'b', 'a']).unwrap(),
            rep.rep_matrix(&['b', 'a', 'b']).unwrap()
        );
        assert!(rep.rep_matrix(&[]).unwrap().is_identity());
        assert!(rep.rep_matrix(&['a', 'a']).unwrap().is_identity());
        assert!(rep.rep_matrix(&['z']).is_err());
    }

    #[test]
    fn column_update_matches_explicit_product() {
        let alpha = FiniteAlphabet::new(vec![0u8, 1, 2, 3], |x, y| (x + y) % 2 == 1).unwrap();
        let rep = alpha.geometric_rep();
        let w = [0u8, 2, 1, 3, 0, 2];
        let mut m = IntMatrix::identity(4);
        for g in &w {
            m = &m * &rep.generator_matrix(g).unwrap();
        }
        assert_eq!(m, rep.rep_matrix(&w).unwrap());
    }
}
