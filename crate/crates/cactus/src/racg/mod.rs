//! Right-angled Coxeter groups: every generator is an involution and the only other relations
//! say that certain pairs commute.
//!
//! The engine is generic over a [`CommutationGraph`], so the same reduction code serves finite
//! alphabets (circular sets, plain subsets) and the infinite alphabet of lifted sets.

mod geometric;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

pub use geometric::GeometricRep;

use crate::error::{Error, Result};

/// A set of involutive generators together with a symmetric commutation predicate.
///
/// The generator order used by normal forms is the letter type's `Ord`.
pub trait CommutationGraph {
    type Letter: Clone + Eq + Hash + Ord + fmt::Debug;

    /// Only queried for distinct letters.
    fn commutes(&self, a: &Self::Letter, b: &Self::Letter) -> bool;

    fn contains(&self, _a: &Self::Letter) -> bool {
        true
    }
}

impl<G: CommutationGraph + ?Sized> CommutationGraph for &G {
    type Letter = G::Letter;

    fn commutes(&self, a: &Self::Letter, b: &Self::Letter) -> bool {
        (**self).commutes(a, b)
    }

    fn contains(&self, a: &Self::Letter) -> bool {
        (**self).contains(a)
    }
}

pub type RacgWord<L> = Vec<L>;

/// A finite generating set with a precomputed commutation table.
#[derive(Debug, Clone)]
pub struct FiniteAlphabet<L> {
    letters: Vec<L>,
    index: HashMap<L, usize>,
    table: Vec<bool>,
}

impl<L: Clone + Eq + Hash + Ord + fmt::Debug> FiniteAlphabet<L> {
    /// Letters are sorted; `commutes` is evaluated on every unordered pair and must be symmetric.
    pub fn new(mut letters: Vec<L>, commutes: impl Fn(&L, &L) -> bool) -> Result<Self> {
        letters.sort();
        letters.dedup();
        let d = letters.len();
        let mut table = vec![false; d * d];
        for a in 0..d {
            for b in a + 1..d {
                let ab = commutes(&letters[a], &letters[b]);
                if ab != commutes(&letters[b], &letters[a]) {
                    return Err(Error::Parameter(format!(
                        "commutation of {:?} and {:?} is not symmetric",
                        letters[a], letters[b]
                    )));
                }
                table[a * d + b] = ab;
                table[b * d + a] = ab;
            }
        }
        let index = letters.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
        Ok(FiniteAlphabet {
            letters,
            index,
            table,
        })
    }

    pub fn letters(&self) -> &[L] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn position(&self, a: &L) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// Geometric representation on the basis of all letters.
    pub fn geometric_rep(&self) -> GeometricRep<L> {
        GeometricRep::new(self, self.letters.clone())
    }

    /// All relators: `g²` for each generator and `ghgh` for each commuting pair.
    pub fn relators(&self) -> Vec<RacgWord<L>> {
        let mut out: Vec<RacgWord<L>> = self.letters.iter().map(|g| vec![g.clone(), g.clone()]).collect();
        for (a, g) in self.letters.iter().enumerate() {
            for h in &self.letters[a + 1..] {
                if self.commutes(g, h) {
                    out.push(vec![g.clone(), h.clone(), g.clone(), h.clone()]);
                }
            }
        }
        out
    }
}

impl<L: Clone + Eq + Hash + Ord + fmt::Debug> CommutationGraph for FiniteAlphabet<L> {
    type Letter = L;

    fn commutes(&self, a: &L, b: &L) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&x), Some(&y)) => self.table[x * self.letters.len() + y],
            _ => false,
        }
    }

    fn contains(&self, a: &L) -> bool {
        self.index.contains_key(a)
    }
}

/// An elementary move on a word; positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// Exchange the commuting letters at positions `p` and `p + 1`.
    Swap(usize),
    /// Delete the equal letters at positions `p` and `p + 1`.
    Cancel(usize),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Swap(p) => write!(f, "swap@{p}"),
            Move::Cancel(p) => write!(f, "cancel@{p}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveTrace {
    pub moves: Vec<Move>,
}

impl MoveTrace {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Replays the trace, checking that every move is legal.
    pub fn replay<G: CommutationGraph>(
        &self,
        graph: &G,
        source: &[G::Letter],
    ) -> Result<RacgWord<G::Letter>> {
        let mut w = source.to_vec();
        for &mv in &self.moves {
            match mv {
                Move::Swap(p) if p >= 1 && p < w.len() => {
                    if w[p - 1] == w[p] || !graph.commutes(&w[p - 1], &w[p]) {
                        return Err(Error::IllegalMove(mv.to_string()));
                    }
                    w.swap(p - 1, p);
                }
                Move::Cancel(p) if p >= 1 && p < w.len() => {
                    if w[p - 1] != w[p] {
                        return Err(Error::IllegalMove(mv.to_string()));
                    }
                    w.drain(p - 1..=p);
                }
                _ => return Err(Error::IllegalMove(mv.to_string())),
            }
        }
        Ok(w)
    }
}

/// Outcome of the bounded breadth-first search in [`Racg::brute_force_equal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOutcome {
    Reachable,
    Unreachable,
    /// The node budget ran out before the search space was exhausted.
    Inconclusive,
}

impl SearchOutcome {
    pub fn is_conclusive(self) -> bool {
        self != SearchOutcome::Inconclusive
    }
}

/// Word operations in the right-angled Coxeter group of a commutation graph.
#[derive(Debug, Clone)]
pub struct Racg<G> {
    graph: G,
}

impl<G: CommutationGraph> Racg<G> {
    pub fn new(graph: G) -> Self {
        Racg { graph }
    }

    pub fn graph(&self) -> &G {
        &self.graph
    }

    pub fn validate(&self, w: &[G::Letter]) -> Result<()> {
        match w.iter().find(|a| !self.graph.contains(a)) {
            Some(a) => Err(Error::UnknownLetter(format!("{a:?}"))),
            None => Ok(()),
        }
    }

    fn commute(&self, a: &G::Letter, b: &G::Letter) -> bool {
        a != b && self.graph.commutes(a, b)
    }

    /// Index `i < j` of an equal letter that can meet `w[j]` by commutations, if any.
    fn partner(&self, w: &[G::Letter], j: usize) -> Option<usize> {
        for i in (0..j).rev() {
            if w[i] == w[j] {
                return Some(i);
            }
            if !self.commute(&w[i], &w[j]) {
                return None;
            }
        }
        None
    }

    /// Shortens `w` to a geodesic by repeatedly cancelling the leftmost cancellable pair.
    ///
    /// The returned trace moves the right letter of the pair leftwards and then cancels.
    ///
    /// ```
    /// use cactus::racg::{FiniteAlphabet, Move, Racg};
    /// let alpha = FiniteAlphabet::new(vec!['a', 'b'], |_, _| true).unwrap();
    /// let racg = Racg::new(&alpha);
    /// let (w, trace) = racg.reduce_geodesic(&['a', 'b', 'a']);
    /// assert_eq!(w, vec!['b']);
    /// assert_eq!(trace.moves, vec![Move::Swap(2), Move::Cancel(1)]);
    /// ```
    pub fn reduce_geodesic(&self, w: &[G::Letter]) -> (RacgWord<G::Letter>, MoveTrace) {
        let mut w = w.to_vec();
        let mut trace = MoveTrace::default();
        let mut j = 1;
        while j < w.len() {
            match self.partner(&w, j) {
                Some(i) => {
                    for p in (i + 1..j).rev() {
                        w.swap(p, p + 1);
                        trace.moves.push(Move::Swap(p + 1));
                    }
                    w.drain(i..=i + 1);
                    trace.moves.push(Move::Cancel(i + 1));
                    j = i.max(1);
                }
                None => j += 1,
            }
        }
        (w, trace)
    }

    pub fn reduce(&self, w: &[G::Letter]) -> RacgWord<G::Letter> {
        self.reduce_geodesic(w).0
    }

    pub fn is_geodesic(&self, w: &[G::Letter]) -> bool {
        (1..w.len()).all(|j| self.partner(w, j).is_none())
    }

    /// Lexicographically least geodesic representing the same element.
    ///
    /// ```
    /// use cactus::racg::{FiniteAlphabet, Racg};
    /// let alpha = FiniteAlphabet::new(vec!['a', 'b', 'c'], |x, y| (*x, *y) != ('a', 'c') && (*x, *y) != ('c', 'a')).unwrap();
    /// let racg = Racg::new(&alpha);
    /// assert_eq!(racg.normal_form(&['c', 'b', 'a']), vec!['b', 'c', 'a']);
    /// ```
    pub fn normal_form(&self, w: &[G::Letter]) -> RacgWord<G::Letter> {
        let mut rest = self.reduce(w);
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            // letters that can be commuted to the front
            let mut best: Option<usize> = None;
            for p in 0..rest.len() {
                let free = rest[..p].iter().all(|q| self.commute(q, &rest[p]));
                if free && best.is_none_or(|b| rest[p] < rest[b]) {
                    best = Some(p);
                }
            }
            let b = best.expect("the first letter is always free");
            out.push(rest.remove(b));
        }
        out
    }

    pub fn equal(&self, w1: &[G::Letter], w2: &[G::Letter]) -> bool {
        self.normal_form(w1) == self.normal_form(w2)
    }

    pub fn is_identity(&self, w: &[G::Letter]) -> bool {
        self.reduce(w).is_empty()
    }

    /// Bounded search for a path of swaps, cancellations and insertions of `aa` from `w1` to `w2`.
    ///
    /// Inserted letters are drawn from the letters occurring in `w1` or `w2`, and no intermediate
    /// word exceeds `max_length`.
    pub fn brute_force_equal(
        &self,
        w1: &[G::Letter],
        w2: &[G::Letter],
        max_length: usize,
        node_budget: usize,
    ) -> SearchOutcome {
        let target = w2.to_vec();
        let mut letters: Vec<G::Letter> = w1.iter().chain(w2).cloned().collect();
        letters.sort();
        letters.dedup();
        let start = w1.to_vec();
        if start == target {
            return SearchOutcome::Reachable;
        }
        if start.len() > max_length || target.len() > max_length {
            return SearchOutcome::Unreachable;
        }
        let mut seen: HashSet<RacgWord<G::Letter>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(w) = queue.pop_front() {
            let mut next = Vec::new();
            for p in 0..w.len().saturating_sub(1) {
                if w[p] == w[p + 1] {
                    let mut v = w.clone();
                    v.drain(p..=p + 1);
                    next.push(v);
                } else if self.commute(&w[p], &w[p + 1]) {
                    let mut v = w.clone();
                    v.swap(p, p + 1);
                    next.push(v);
                }
            }
            if w.len() + 2 <= max_length {
                for p in 0..=w.len() {
                    for a in &letters {
                        let mut v = w.clone();
                        v.splice(p..p, [a.clone(), a.clone()]);
                        next.push(v);
                    }
                }
            }
            for v in next {
                if v == target {
                    return SearchOutcome::Reachable;
                }
                if seen.insert(v.clone()) {
                    if seen.len() > node_budget {
                        return SearchOutcome::Inconclusive;
                    }
                    queue.push_back(v);
                }
            }
        }
        SearchOutcome::Unreachable
    }
}
