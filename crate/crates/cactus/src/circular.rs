//! Circular intervals, circular sets, and their lifts to the integers.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{check_n, check_strand, wrap, AffinePermutation, Decomposition, Permutation};

/// The circular interval `[i,j]_c = (i, i+1, …, j)` read modulo `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularInterval {
    n: usize,
    i: usize,
    j: usize,
}

impl CircularInterval {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        check_n(n, 2)?;
        check_strand(n, i)?;
        check_strand(n, j)?;
        if i == j {
            return Err(Error::EqualEndpoints(i));
        }
        Ok(CircularInterval { n, i, j })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn len(&self) -> usize {
        (self.j + self.n - self.i) % self.n + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.len())
            .map(|t| wrap((self.i + t) as i64, self.n))
            .collect()
    }

    pub fn contains(&self, p: usize) -> bool {
        (p + self.n - self.i) % self.n < self.len()
    }

    pub fn to_set(&self) -> CircularSet {
        CircularSet {
            n: self.n,
            seq: self.elements(),
        }
    }

    pub fn reversal(&self) -> Permutation {
        crate::perm::interval_reversal(self.n, self.i, self.j).expect("valid interval")
    }
}

/// An ordered sequence of distinct strands whose order fits inside some circular interval.
///
/// Equality is sequence equality, so rotations of the same subset are different sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CircularSet {
    n: usize,
    seq: Vec<usize>,
}

/// Checks circularity of a sequence of strands.
///
/// ```
/// use cactus::circular::is_circular;
/// assert!(is_circular(&[1, 3, 7], 8).unwrap());
/// assert!(!is_circular(&[1, 7, 4, 8], 8).unwrap());
/// ```
pub fn is_circular(seq: &[usize], n: usize) -> Result<bool> {
    if seq.is_empty() {
        return Err(Error::Empty);
    }
    let mut seen = vec![false; n + 1];
    for &p in seq {
        check_strand(n, p)?;
        if std::mem::replace(&mut seen[p], true) {
            return Err(Error::RepeatedEntry(p as i64));
        }
    }
    let offset = |p: usize| (p + n - seq[0]) % n;
    Ok(seq.windows(2).all(|w| offset(w[0]) < offset(w[1])))
}

impl CircularSet {
    /// Builds a circular set of size at least one.
    pub fn new(n: usize, seq: Vec<usize>) -> Result<Self> {
        check_n(n, 1)?;
        if !is_circular(&seq, n)? {
            return Err(Error::NotCircular(format!("{seq:?}")));
        }
        Ok(CircularSet { n, seq })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    fn same_n(&self, other: &CircularSet) -> Result<()> {
        if self.n != other.n {
            Err(Error::SizeMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    /// `self ⊂_c other`: `self` is a subsequence of `other`.
    pub fn csubset(&self, other: &CircularSet) -> Result<bool> {
        self.same_n(other)?;
        Ok(self.is_subsequence_of(other))
    }

    fn is_subsequence_of(&self, other: &CircularSet) -> bool {
        let mut it = other.seq.iter();
        self.seq.iter().all(|x| it.any(|y| y == x))
    }

    pub fn disjoint(&self, other: &CircularSet) -> Result<bool> {
        self.same_n(other)?;
        Ok(self.is_disjoint_from(other))
    }

    fn is_disjoint_from(&self, other: &CircularSet) -> bool {
        self.seq.iter().all(|x| !other.seq.contains(x))
    }

    /// Generators `τ_I`, `τ_J` of the diagram group commute iff the sets are disjoint or nested.
    pub fn commute_ad(&self, other: &CircularSet) -> Result<bool> {
        self.same_n(other)?;
        Ok(self.commutes_with(other))
    }

    pub(crate) fn commutes_with(&self, other: &CircularSet) -> bool {
        self.is_disjoint_from(other) || self.is_subsequence_of(other) || other.is_subsequence_of(self)
    }

    /// Action of `ρ_m`, the transposition of `m` and `m+1` (of `n` and `1` when `m = n`).
    pub fn act_adjacent(&self, m: usize) -> Result<CircularSet> {
        check_strand(self.n, m)?;
        let m2 = m % self.n + 1;
        if self.seq.contains(&m) && self.seq.contains(&m2) {
            return Ok(self.clone());
        }
        let seq: Vec<usize> = self
            .seq
            .iter()
            .map(|&p| match p {
                p if p == m => m2,
                p if p == m2 => m,
                p => p,
            })
            .collect();
        debug_assert!(is_circular(&seq, self.n).unwrap_or(false));
        Ok(CircularSet { n: self.n, seq })
    }

    /// Action of a permutation through its default adjacent decomposition.
    pub fn act_perm(&self, s: &Permutation) -> Result<CircularSet> {
        self.act_perm_with(s, Decomposition::BubbleRight)
    }

    pub fn act_perm_with(&self, s: &Permutation, strategy: Decomposition) -> Result<CircularSet> {
        if s.n() != self.n {
            return Err(Error::SizeMismatch(s.n(), self.n));
        }
        let mut out = self.clone();
        for m in s.adjacent_decomposition_with(strategy).into_iter().rev() {
            out = out.act_adjacent(m)?;
        }
        Ok(out)
    }

    /// All circular sets of size at least `min_size`, ordered by size then lexicographically.
    pub fn enumerate(n: usize, min_size: usize) -> Result<Vec<CircularSet>> {
        check_n(n, 1)?;
        if min_size == 0 || min_size > n {
            return Err(Error::Parameter(format!("min_size {min_size} for n = {n}")));
        }
        let mut out = Vec::new();
        for k in min_size..=n {
            let mut level = Vec::new();
            for start in 1..=n {
                // choose k-1 further offsets in 1..n, increasing
                for offsets in increasing_tuples(n - 1, k - 1) {
                    let seq = std::iter::once(start)
                        .chain(offsets.iter().map(|&o| wrap((start + o) as i64, n)))
                        .collect();
                    level.push(CircularSet { n, seq });
                }
            }
            level.sort();
            out.extend(level);
        }
        Ok(out)
    }

    /// Text form `(i1,...,ik)@n`.
    pub fn to_text(&self) -> String {
        format!("{self}@{}", self.n)
    }
}

/// Increasing tuples of length `k` drawn from `1..=m`.
fn increasing_tuples(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(next: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in next..=m {
            cur.push(v);
            go(v + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, m, k, &mut Vec::new(), &mut out);
    out
}

impl Ord for CircularSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.seq.len(), &self.seq).cmp(&(other.n, other.seq.len(), &other.seq))
    }
}

impl PartialOrd for CircularSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CircularSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.seq.iter())
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = T>) -> fmt::Result {
    f.write_str("(")?;
    for (k, x) in items.enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

impl FromStr for CircularSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in {s:?}"),
        };
        let (body, n) = s.trim().split_once('@').ok_or_else(|| bad("missing @n"))?;
        let n: usize = n.trim().parse().map_err(|_| bad("bad strand count"))?;
        let inner = body
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("expected (..)"))?;
        let seq = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad("bad entry")))
            .collect::<Result<Vec<_>>>()?;
        CircularSet::new(n, seq)
    }
}

/// A finite set of integers with pairwise distinct residues modulo `n`, up to translation by `n`.
///
/// Stored sorted and translated so that its minimum lies in `1..=n`. These label the strands a
/// cactus bundles together once the cylinder is unrolled onto the plane; the sets spanning fewer
/// than `n` consecutive integers are exactly the circular sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiftedSet {
    n: usize,
    elems: Vec<i64>,
}

impl LiftedSet {
    pub fn new(n: usize, mut elems: Vec<i64>) -> Result<Self> {
        check_n(n, 1)?;
        if elems.is_empty() {
            return Err(Error::Empty);
        }
        elems.sort_unstable();
        let mut residues: Vec<usize> = elems.iter().map(|&x| wrap(x, n)).collect();
        residues.sort_unstable();
        if let Some(w) = residues.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedEntry(w[0] as i64));
        }
        let shift = (elems[0] - 1).div_euclid(n as i64) * n as i64;
        for x in &mut elems {
            *x -= shift;
        }
        Ok(LiftedSet { n, elems })
    }

    /// Unrolls a circular set onto consecutive integers starting at its first entry.
    pub fn from_circular(set: &CircularSet) -> Self {
        let n = set.n;
        let first = set.seq[0];
        let elems = set
            .seq
            .iter()
            .map(|&p| (first + (p + n - first) % n) as i64)
            .collect();
        LiftedSet { n, elems }
    }

    pub fn from_interval(iv: &CircularInterval) -> Self {
        LiftedSet::from_circular(&iv.to_set())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[i64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// `max − min`.
    pub fn span(&self) -> i64 {
        self.elems[self.elems.len() - 1] - self.elems[0]
    }

    /// The circular set read off the cylinder, if the set winds less than once around it.
    pub fn to_circular(&self) -> Option<CircularSet> {
        (self.span() < self.n as i64).then(|| CircularSet {
            n: self.n,
            seq: self.elems.iter().map(|&x| wrap(x, self.n)).collect(),
        })
    }

    pub fn residues(&self) -> Vec<usize> {
        self.elems.iter().map(|&x| wrap(x, self.n)).collect()
    }

    pub fn disjoint(&self, other: &LiftedSet) -> bool {
        let mine = self.residues();
        other.residues().iter().all(|r| !mine.contains(r))
    }

    /// True iff some translate of `self` by a multiple of `n` lies inside `other`.
    pub fn nested_in(&self, other: &LiftedSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let n = self.n as i64;
        let a0 = self.elems[0];
        other.elems.iter().any(|&b| {
            (b - a0).rem_euclid(n) == 0 && {
                let t = b - a0;
                self.elems
                    .iter()
                    .all(|&x| other.elems.binary_search(&(x + t)).is_ok())
            }
        })
    }

    pub fn commutes_with(&self, other: &LiftedSet) -> bool {
        self.disjoint(other) || self.nested_in(other) || other.nested_in(self)
    }

    /// Image under an affine permutation.
    pub fn act(&self, f: &AffinePermutation) -> LiftedSet {
        LiftedSet::new(self.n, self.elems.iter().map(|&x| f.apply(x)).collect())
            .expect("affine permutations preserve distinct residues")
    }
}

impl Ord for LiftedSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.elems.len(), &self.elems).cmp(&(other.n, other.elems.len(), &other.elems))
    }
}

impl PartialOrd for LiftedSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Circular sets print as `(3,4,2)`; sets that wind around the cylinder print their integers as `{1,6}`.
impl fmt::Display for LiftedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_circular() {
            Some(c) => c.fmt(f),
            None => {
                f.write_str("{")?;
                for (k, x) in self.elems.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(n: usize, seq: &[usize]) -> CircularSet {
        CircularSet::new(n, seq.to_vec()).unwrap()
    }

    #[test]
    fn circularity() {
        assert!(is_circular(&[1, 3, 7], 8).unwrap());
        assert!(!is_circular(&[1, 7, 4, 8], 8).unwrap());
        assert!(is_circular(&[5], 6).unwrap());
        assert!(is_circular(&[1, 1], 3).is_err());
        assert!(is_circular(&[0], 3).is_err());
        assert!(is_circular(&[], 3).is_err());
    }

    #[test]
    fn containment_examples() {
        assert!(cs(4, &[1, 2, 3]).csubset(&cs(4, &[1, 2, 3, 4])).unwrap());
        assert!(!cs(4, &[1, 2, 3]).csubset(&cs(4, &[3, 4, 1, 2])).unwrap());
        let i = cs(5, &[2, 4]);
        assert!(i.csubset(&i).unwrap());
        assert!(i.csubset(&cs(4, &[2, 4])).is_err());
    }

    #[test]
    fn disjoint_and_commute_examples() {
        assert!(cs(4, &[1, 2]).disjoint(&cs(4, &[3, 4])).unwrap());
        assert!(!cs(4, &[1, 2]).disjoint(&cs(4, &[2, 3])).unwrap());
        assert!(cs(6, &[3, 4, 1]).disjoint(&cs(6, &[2, 5])).unwrap());
        assert!(cs(4, &[1, 2]).commute_ad(&cs(4, &[3, 4])).unwrap());
        assert!(cs(4, &[1, 2]).commute_ad(&cs(4, &[1, 2, 3])).unwrap());
        assert!(!cs(4, &[1, 2]).commute_ad(&cs(4, &[3, 4, 2])).unwrap());
    }

    #[test]
    fn adjacent_action_examples() {
        assert_eq!(cs(4, &[1, 2]).act_adjacent(1).unwrap(), cs(4, &[1, 2]));
        assert_eq!(cs(4, &[1, 2]).act_adjacent(2).unwrap(), cs(4, &[1, 3]));
        assert_eq!(cs(4, &[2, 4]).act_adjacent(1).unwrap(), cs(4, &[1, 4]));
        assert_eq!(cs(4, &[4, 2]).act_adjacent(4).unwrap(), cs(4, &[1, 2]));
    }

    #[test]
    fn perm_action_example() {
        let s = crate::perm::interval_reversal(4, 1, 3).unwrap();
        assert_eq!(cs(4, &[1, 2]).act_perm(&s).unwrap(), cs(4, &[2, 3]));
        let id = Permutation::identity(4);
        assert_eq!(cs(4, &[3, 1]).act_perm(&id).unwrap(), cs(4, &[3, 1]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            CircularSet::enumerate(2, 2).unwrap(),
            vec![cs(2, &[1, 2]), cs(2, &[2, 1])]
        );
        assert_eq!(CircularSet::enumerate(3, 2).unwrap().len(), 9);
        assert_eq!(CircularSet::enumerate(4, 2).unwrap().len(), 28);
        assert_eq!(CircularSet::enumerate(5, 5).unwrap().len(), 5);
    }

    #[test]
    fn intervals_are_circular_sets() {
        for n in 2..=7 {
            for i in 1..=n {
                for j in (1..=n).filter(|&j| j != i) {
                    let iv = CircularInterval::new(n, i, j).unwrap();
                    let e = iv.elements();
                    assert!(is_circular(&e, n).unwrap());
                    assert_eq!(e.len(), iv.len());
                    assert!(e.iter().all(|&p| iv.contains(p)));
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let c: CircularSet = "(3,4,1)@6".parse().unwrap();
        assert_eq!(c, cs(6, &[3, 4, 1]));
        assert_eq!(c.to_text(), "(3,4,1)@6");
        assert!("(1,3,2)@3".parse::<CircularSet>().is_err());
    }

    #[test]
    fn lifted_sets() {
        let a = LiftedSet::from_circular(&cs(4, &[3, 4, 1]));
        assert_eq!(a.elems(), &[3, 4, 5]);
        assert_eq!(a.to_circular().unwrap(), cs(4, &[3, 4, 1]));
        let b = LiftedSet::new(4, vec![-3, 2]).unwrap();
        assert_eq!(b.elems(), &[1, 6]);
        assert_eq!(b.to_string(), "{1,6}");
        assert!(b.to_circular().is_none());
        assert!(LiftedSet::new(4, vec![1, 5]).is_err());
        let c = LiftedSet::from_circular(&cs(4, &[4, 1]));
        assert!(c.nested_in(&a));
        assert!(!c.nested_in(&b) && !b.nested_in(&c));
        assert!(!b.commutes_with(&c));
    }

    #[test]
    fn lifted_commutation_restricts_to_circular() {
        for n in 2..=6 {
            let all = CircularSet::enumerate(n, 1).unwrap();
            for x in &all {
                for y in &all {
                    let (lx, ly) = (LiftedSet::from_circular(x), LiftedSet::from_circular(y));
                    assert_eq!(x.commutes_with(y), lx.commutes_with(&ly), "{x} {y}");
                }
            }
        }
    }
}
