use super::word::{CactusLetter, CactusWord};
use crate::error::{Error, Result};
use crate::perm::check_n;

/// Appends `prefix · block · prefix⁻¹` to `u`, cancelling adjacent equal letters, and empties `block`.
fn push_conjugate(prefix: &[CactusLetter], block: &mut Vec<CactusLetter>, u: &mut Vec<CactusLetter>) {
    if block.is_empty() {
        return;
    }
    for &l in prefix.iter().chain(block.iter()).chain(prefix.iter().rev()) {
        if u.last() == Some(&l) {
            u.pop();
        } else {
            u.push(l);
        }
    }
    block.clear();
}

impl CactusWord {
    /// `t_k = σ_{1,2}σ_{1,4}⋯σ_{1,2^k}`, an element of order `2^k`.
    pub fn torsion_element(k: u32, n: usize) -> Result<CactusWord> {
        check_n(n, 2)?;
        if k == 0 || k >= usize::BITS || 1usize << k > n {
            return Err(Error::Parameter(format!("t_{k} needs 2^{k} <= n = {n}")));
        }
        CactusWord::new(n, (1..=k).map(|m| CactusLetter::new(1, 1 << m)).collect())
    }

    /// Every later support is nested in, or disjoint from, every earlier one.
    pub fn is_decreasing(&self) -> bool {
        let n = self.n();
        let supports: Vec<_> = self.letters().iter().map(|l| l.support(n)).collect();
        supports.iter().enumerate().all(|(p, a)| {
            supports[p + 1..]
                .iter()
                .all(|b| b.csubset(a).expect("same n") || b.disjoint(a).expect("same n"))
        })
    }

    /// A decreasing word that does not split as a product of two words with disjoint supports,
    /// i.e. the supports form a connected intersection graph.
    pub fn is_irreducibly_decreasing(&self) -> Result<bool> {
        if !self.is_decreasing() {
            return Err(Error::Parameter(format!("{self} is not decreasing")));
        }
        let n = self.n();
        let supports: Vec<_> = self.letters().iter().map(|l| l.support(n)).collect();
        if supports.is_empty() {
            return Ok(false);
        }
        let mut reached = vec![false; supports.len()];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(a) = stack.pop() {
            for b in 0..supports.len() {
                if !reached[b] && !supports[a].disjoint(&supports[b]).expect("same n") {
                    reached[b] = true;
                    stack.push(b);
                }
            }
        }
        Ok(reached.into_iter().all(|r| r))
    }

    fn check_size_bound(&self, p: usize) -> Result<()> {
        if p < 2 || p > self.n() {
            return Err(Error::Parameter(format!(
                "need 2 <= p <= n, got p = {p}, n = {}",
                self.n()
            )));
        }
        Ok(())
    }

    /// `ε(w)`: deletes the letters whose support has fewer than `p` strands.
    pub fn epsilon(&self, p: usize) -> Result<CactusWord> {
        self.check_size_bound(p)?;
        let n = self.n();
        Ok(self.with_letters(
            self.letters()
                .iter()
                .copied()
                .filter(|l| l.support_len(n) >= p)
                .collect(),
        ))
    }

    /// Splits `w = u·v` with `v = ε(w)` and `u` in the normal closure of the small-support letters.
    ///
    /// Writing `w = a_1 b_1 ⋯ a_k b_k` with large-support blocks `a_t` and small-support blocks
    /// `b_t`, `u` is the product of the conjugates `(a_1⋯a_t) b_t (a_1⋯a_t)⁻¹`.
    ///
    /// ```
    /// use cactus::CactusWord;
    /// let w = CactusWord::parse(3, "s(1,3) s(1,2)").unwrap();
    /// let (u, v) = w.split(3).unwrap();
    /// assert_eq!((u.to_string(), v.to_string()), ("s(1,3) s(1,2) s(1,3)".into(), "s(1,3)".into()));
    /// ```
    pub fn split(&self, p: usize) -> Result<(CactusWord, CactusWord)> {
        let v = self.epsilon(p)?;
        let n = self.n();
        let mut prefix: Vec<CactusLetter> = Vec::new();
        let mut u: Vec<CactusLetter> = Vec::new();
        let mut block: Vec<CactusLetter> = Vec::new();
        for &l in self.letters() {
            if l.support_len(n) >= p {
                push_conjugate(&prefix, &mut block, &mut u);
                prefix.push(l);
            } else {
                block.push(l);
            }
        }
        push_conjugate(&prefix, &mut block, &mut u);
        Ok((self.with_letters(u), v))
    }

    /// Every letter's support size lies in `p..=q`.
    pub fn in_range(&self, p: usize, q: usize) -> Result<bool> {
        self.check_size_bound(p)?;
        self.check_size_bound(q)?;
        if p > q {
            return Err(Error::Parameter(format!("empty range {p}..={q}")));
        }
        let n = self.n();
        Ok(self.letters().iter().all(|l| (p..=q).contains(&l.support_len(n))))
    }

    /// Shifts every index by `d` around the cylinder.
    pub fn rotate(&self, d: i64) -> CactusWord {
        let n = self.n();
        self.with_letters(self.letters().iter().map(|l| l.shifted(n, d)).collect())
    }
}
