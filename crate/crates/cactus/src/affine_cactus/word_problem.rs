use std::fmt;

use super::semidirect::{LiftedGraph, SemidirectElement};
use super::word::{CactusLetter, CactusWord};
use crate::error::Result;
use crate::racg::{Move, Racg};

/// Order of a group element. Finite orders in `AJ_n` are powers of two at most `2^{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

impl CactusWord {
    pub fn is_identity(&self) -> bool {
        self.phi().is_identity()
    }

    /// Equality in `AJ_n`, decided as triviality of `w1 · w2⁻¹`.
    pub fn equals(&self, other: &CactusWord) -> Result<bool> {
        Ok(self.concat(&other.inverse())?.is_identity())
    }

    /// Rewrites the word, using only defining relations, into one whose diagram part is geodesic.
    ///
    /// Each cancellation in the diagram group deletes two equal letters; each commutation becomes a
    /// commutation or a nested exchange `σ_{i,j}σ_{k,l} → σ_{k,l}σ_{s_{k,l}(j),s_{k,l}(i)}`.
    ///
    /// ```
    /// use cactus::CactusWord;
    /// let w = CactusWord::parse(4, "s(2,3) s(1,4) s(2,3)").unwrap();
    /// assert_eq!(w.lift_reduce().to_string(), "s(1,4)");
    /// ```
    pub fn lift_reduce(&self) -> CactusWord {
        let n = self.n();
        let phi = self.phi();
        let mut diagram = phi.diagram_part().to_vec();
        let racg = Racg::new(LiftedGraph { n });
        let (_, trace) = racg.reduce_geodesic(&diagram);
        let mut word: Vec<CactusLetter> = self.letters().to_vec();
        for mv in trace.moves {
            match mv {
                Move::Cancel(p) => {
                    assert_eq!(
                        word[p - 1],
                        word[p],
                        "cancelled diagram letters come from equal letters"
                    );
                    word.drain(p - 1..=p);
                    diagram.drain(p - 1..=p);
                }
                Move::Swap(p) => {
                    let (x, y) = (word[p - 1], word[p]);
                    let (dx, dy) = (&diagram[p - 1], &diagram[p]);
                    let (a, b) = if dx.disjoint(dy) {
                        (y, x)
                    } else if dx.nested_in(dy) {
                        (y, x.conjugated_by(&y.reversal(n)))
                    } else {
                        (y.conjugated_by(&x.reversal(n)), x)
                    };
                    word[p - 1] = a;
                    word[p] = b;
                    diagram.swap(p - 1, p);
                }
            }
        }
        self.with_letters(word)
    }

    /// Order of the element: the least `2^s`, `s < n`, with `w^{2^s} = 1`, or infinite.
    ///
    /// ```
    /// use cactus::{CactusWord, Order};
    /// let t2 = CactusWord::parse(4, "s(1,2) s(1,4)").unwrap();
    /// assert_eq!(t2.order(), Order::Finite(4));
    /// ```
    pub fn order(&self) -> Order {
        let mut e: SemidirectElement = self.phi().reduced();
        for s in 0..self.n() {
            if s > 0 {
                e = e.mul(&e).expect("same strand count").reduced();
            }
            if e.is_identity() {
                return Order::Finite(1 << s);
            }
        }
        Order::Infinite
    }
}
