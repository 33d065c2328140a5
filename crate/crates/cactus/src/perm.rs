//! Permutations of `{1..n}`, interval reversals and their periodic lifts.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Images are stored 1-based: `images[p - 1] = s(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Strategy used to write a permutation as a product of adjacent transpositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decomposition {
    /// Bubble sort on positions (right multiplication).
    BubbleRight,
    /// Bubble sort on values (left multiplication).
    BubbleLeft,
    /// Cycle decomposition, each transposition expanded into adjacent ones.
    Transpositions,
}

impl Decomposition {
    pub const ALL: [Decomposition; 3] = [
        Decomposition::BubbleRight,
        Decomposition::BubbleLeft,
        Decomposition::Transpositions,
    ];
}

pub(crate) fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::StrandCount { n, min })
    } else {
        Ok(())
    }
}

pub(crate) fn check_strand(n: usize, p: usize) -> Result<()> {
    if p == 0 || p > n {
        Err(Error::StrandOutOfRange { index: p as i64, n })
    } else {
        Ok(())
    }
}

/// Normalizes an integer into `{1..n}`.
pub fn wrap(x: i64, n: usize) -> usize {
    (x - 1).rem_euclid(n as i64) as usize + 1
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        check_n(n, 1)?;
        let mut seen = vec![false; n];
        for &v in &images {
            check_strand(n, v)?;
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        check_strand(n, a)?;
        check_strand(n, b)?;
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images[p - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&p| self.apply(p)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Indices `m_1..m_r` with `self = ρ_{m_1} ∘ … ∘ ρ_{m_r}`, where `ρ_m` swaps `m` and `m+1`.
    pub fn adjacent_decomposition(&self) -> Vec<usize> {
        self.adjacent_decomposition_with(Decomposition::BubbleRight)
    }

    pub fn adjacent_decomposition_with(&self, strategy: Decomposition) -> Vec<usize> {
        match strategy {
            Decomposition::BubbleRight => {
                // s ∘ ρ_c1 ∘ … ∘ ρ_ck = id, hence s = ρ_ck ∘ … ∘ ρ_c1
                let mut a = self.images.clone();
                let mut ops = Vec::new();
                sort_adjacent(&mut a, &mut ops);
                ops.reverse();
                ops
            }
            Decomposition::BubbleLeft => {
                // ρ_dk ∘ … ∘ ρ_d1 ∘ s = id, hence s = ρ_d1 ∘ … ∘ ρ_dk
                let mut a = self.inverse().images;
                let mut ops = Vec::new();
                sort_adjacent(&mut a, &mut ops);
                ops
            }
            Decomposition::Transpositions => {
                let mut out = Vec::new();
                for (a, b) in self.transposition_factors() {
                    // (a b) = ρ_a ρ_{a+1} … ρ_{b-2} ρ_{b-1} ρ_{b-2} … ρ_a
                    out.extend(a..b);
                    out.extend((a..b - 1).rev());
                }
                out
            }
        }
    }

    /// Transpositions `(a, b)`, `a < b`, whose left-to-right product is `self`.
    fn transposition_factors(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            // (c1 c2 … ck) = (c1 ck) ∘ … ∘ (c1 c3) ∘ (c1 c2)
            for &c in cycle[1..].iter().rev() {
                out.push((start.min(c), start.max(c)));
            }
        }
        out
    }
}

fn sort_adjacent(a: &mut [usize], ops: &mut Vec<usize>) {
    let n = a.len();
    for pass in 0..n {
        for m in 0..n.saturating_sub(1 + pass) {
            if a[m] > a[m + 1] {
                a.swap(m, m + 1);
                ops.push(m + 1);
            }
        }
    }
}

/// The reversal `s_{k,l}` of the circular interval `[k,l]_c`.
pub fn interval_reversal(n: usize, k: usize, l: usize) -> Result<Permutation> {
    check_n(n, 2)?;
    check_strand(n, k)?;
    check_strand(n, l)?;
    if k == l {
        return Err(Error::EqualEndpoints(k));
    }
    let len = (l + n - k) % n + 1;
    let mut images: Vec<usize> = (1..=n).collect();
    for t in 0..len {
        let p = wrap((k + t) as i64, n);
        images[p - 1] = wrap((k + l) as i64 - p as i64, n);
    }
    Ok(Permutation { images })
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.images.iter())
    }
}

pub(crate) fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("[")?;
    for (k, x) in items.enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("expected [..], got {t:?}"),
        })?;
    inner
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| {
            x.trim().parse::<i64>().map_err(|e| Error::Parse {
                pos: 0,
                msg: format!("{x:?}: {e}"),
            })
        })
        .collect()
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = parse_int_list(s)?;
        let images = values
            .into_iter()
            .map(|v| usize::try_from(v).map_err(|_| Error::NotPermutation(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

/// A bijection `f` of the integers with `f(x + n) = f(x) + n`, given by its window `f(1), …, f(n)`.
///
/// These are the lifts of permutations of the strands of a cylinder to its universal cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn identity(n: usize) -> Self {
        AffinePermutation {
            window: (1..=n as i64).collect(),
        }
    }

    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        check_n(n, 1)?;
        let mut seen = vec![false; n];
        for &v in &window {
            let r = wrap(v, n);
            if std::mem::replace(&mut seen[r - 1], true) {
                return Err(Error::NotPermutation(format!("{window:?}")));
            }
        }
        Ok(AffinePermutation { window })
    }

    /// The periodic reversal of the block `k, k+1, …, l'` where `l' ≡ l` is the first such value above `k`.
    pub fn interval_reversal(n: usize, k: usize, l: usize) -> Result<Self> {
        check_n(n, 2)?;
        check_strand(n, k)?;
        check_strand(n, l)?;
        if k == l {
            return Err(Error::EqualEndpoints(k));
        }
        let lo = k as i64;
        let hi = if l > k { l as i64 } else { (l + n) as i64 };
        let window = (1..=n as i64)
            .map(|p| {
                let q = lo + (p - lo).rem_euclid(n as i64);
                if q <= hi {
                    lo + hi - q + (p - q)
                } else {
                    p
                }
            })
            .collect();
        Ok(AffinePermutation { window })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn apply(&self, x: i64) -> i64 {
        let n = self.n() as i64;
        let r = (x - 1).rem_euclid(n);
        self.window[r as usize] + (x - 1 - r)
    }

    pub fn compose(&self, other: &AffinePermutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(AffinePermutation {
            window: other.window.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n() as i64;
        let mut window = vec![0; self.n()];
        for (k, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(n);
            window[r as usize] = k as i64 + 1 - (v - 1 - r);
        }
        AffinePermutation { window }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().zip(1..).all(|(&v, k)| v == k)
    }

    /// The induced permutation of the residues `{1..n}`.
    pub fn projection(&self) -> Permutation {
        let n = self.n();
        Permutation {
            images: self.window.iter().map(|&v| wrap(v, n)).collect(),
        }
    }

    /// Winding numbers `t_p` with `f(p) = π(p) + n·t_p`.
    pub fn windings(&self) -> Vec<i64> {
        let n = self.n() as i64;
        self.window.iter().map(|&v| (v - 1).div_euclid(n)).collect()
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.window.iter())
    }
}

impl FromStr for AffinePermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AffinePermutation::from_window(parse_int_list(s)?)
    }
}
