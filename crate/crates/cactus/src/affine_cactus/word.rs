use std::fmt;

use crate::circular::{CircularInterval, CircularSet, LiftedSet};
use crate::error::{Error, Result};
use crate::perm::{check_n, check_strand, interval_reversal, wrap, AffinePermutation, Permutation};

/// The generator `σ_{i,j}`, whose support is the circular interval `[i,j]_c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CactusLetter {
    pub i: usize,
    pub j: usize,
}

impl CactusLetter {
    pub fn new(i: usize, j: usize) -> Self {
        CactusLetter { i, j }
    }

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        check_strand(n, self.i)?;
        check_strand(n, self.j)?;
        if self.i == self.j {
            return Err(Error::EqualEndpoints(self.i));
        }
        Ok(())
    }

    pub fn interval(&self, n: usize) -> CircularInterval {
        CircularInterval::new(n, self.i, self.j).expect("letter checked against n")
    }

    pub fn support(&self, n: usize) -> CircularSet {
        self.interval(n).to_set()
    }

    pub fn support_len(&self, n: usize) -> usize {
        (self.j + n - self.i) % n + 1
    }

    pub fn lifted_support(&self, n: usize) -> LiftedSet {
        LiftedSet::from_interval(&self.interval(n))
    }

    pub fn reversal(&self, n: usize) -> Permutation {
        interval_reversal(n, self.i, self.j).expect("letter checked against n")
    }

    pub fn affine_reversal(&self, n: usize) -> AffinePermutation {
        AffinePermutation::interval_reversal(n, self.i, self.j).expect("letter checked against n")
    }

    /// The letter `σ_{s(j),s(i)}` supported on the image of this letter's support under `s`.
    pub fn conjugated_by(&self, s: &Permutation) -> CactusLetter {
        CactusLetter::new(s.apply(self.j), s.apply(self.i))
    }

    pub fn shifted(&self, n: usize, d: i64) -> CactusLetter {
        CactusLetter::new(wrap(self.i as i64 + d, n), wrap(self.j as i64 + d, n))
    }
}

impl fmt::Display for CactusLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({},{})", self.i, self.j)
    }
}

/// A word in the generators of `AJ_n`. Since every generator is an involution, the inverse of a
/// word is its reversal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CactusWord {
    n: usize,
    letters: Vec<CactusLetter>,
}

impl CactusWord {
    pub fn new(n: usize, letters: Vec<CactusLetter>) -> Result<Self> {
        check_n(n, 2)?;
        for l in &letters {
            l.check(n)?;
        }
        Ok(CactusWord { n, letters })
    }

    pub fn empty(n: usize) -> Result<Self> {
        CactusWord::new(n, Vec::new())
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        CactusWord::new(n, pairs.iter().map(|&(i, j)| CactusLetter::new(i, j)).collect())
    }

    /// Parses the text grammar: tokens `s(i,j)` separated by whitespace or `*`, each optionally
    /// followed by `^m`.
    ///
    /// ```
    /// use cactus::CactusWord;
    /// let w = CactusWord::parse(4, "s(1,2)^2 * s(4,1)").unwrap();
    /// assert_eq!(w.to_string(), "s(1,2) s(1,2) s(4,1)");
    /// assert!(CactusWord::parse(4, "s(1,5)").is_err());
    /// ```
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let pairs = parse_pairs(text)?;
        CactusWord::from_pairs(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[CactusLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn same_n(&self, other: &CactusWord) -> Result<()> {
        if self.n != other.n {
            Err(Error::SizeMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn concat(&self, other: &CactusWord) -> Result<CactusWord> {
        self.same_n(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(CactusWord { n: self.n, letters })
    }

    pub fn inverse(&self) -> CactusWord {
        CactusWord {
            n: self.n,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn pow(&self, m: usize) -> CactusWord {
        CactusWord {
            n: self.n,
            letters: self.letters.repeat(m),
        }
    }

    pub(crate) fn with_letters(&self, letters: Vec<CactusLetter>) -> CactusWord {
        CactusWord { n: self.n, letters }
    }
}

impl fmt::Display for CactusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            l.fmt(f)?;
        }
        Ok(())
    }
}

/// A word in the generators `σ_{i,j}`, `i < j`, of the classical cactus group `J_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassicCactusWord {
    n: usize,
    letters: Vec<(usize, usize)>,
}

impl ClassicCactusWord {
    pub fn new(n: usize, letters: Vec<(usize, usize)>) -> Result<Self> {
        check_n(n, 2)?;
        for &(i, j) in &letters {
            check_strand(n, i)?;
            check_strand(n, j)?;
            if i >= j {
                return Err(Error::NotIncreasing { i, j });
            }
        }
        Ok(ClassicCactusWord { n, letters })
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        ClassicCactusWord::new(n, parse_pairs(text)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[(usize, usize)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> ClassicCactusWord {
        ClassicCactusWord {
            n: self.n,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &ClassicCactusWord) -> Result<ClassicCactusWord> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(ClassicCactusWord { n: self.n, letters })
    }

    /// The same letters read in `AJ_n`.
    pub fn embed(&self) -> CactusWord {
        CactusWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .map(|&(i, j)| CactusLetter::new(i, j))
                .collect(),
        }
    }
}

impl fmt::Display for ClassicCactusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.embed().fmt(f)
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse {
                pos: start,
                msg: "expected an integer".into(),
            })
    }

    fn strand(&mut self) -> Result<usize> {
        let start = self.pos;
        let v = self.int()?;
        usize::try_from(v).map_err(|_| Error::Parse {
            pos: start,
            msg: format!("strand {v} is negative"),
        })
    }
}

pub(crate) fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut out = Vec::new();
    loop {
        lx.skip_ws();
        match lx.peek() {
            None => break,
            Some(b'*') if !out.is_empty() => {
                lx.pos += 1;
                continue;
            }
            Some(b's') => lx.pos += 1,
            Some(_) => return Err(lx.err("expected s(i,j)")),
        }
        lx.expect(b'(')?;
        let i = lx.strand()?;
        lx.expect(b',')?;
        let j = lx.strand()?;
        lx.expect(b')')?;
        lx.skip_ws();
        let mut reps = 1;
        if lx.peek() == Some(b'^') {
            lx.pos += 1;
            // a single involution is its own inverse, so the sign only matters for the count
            reps = lx.int()?.unsigned_abs() as usize;
        }
        out.extend(std::iter::repeat_n((i, j), reps));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!(parse_pairs("").unwrap(), vec![]);
        assert_eq!(parse_pairs("  s(1,2)*s(3, 4) ").unwrap(), vec![(1, 2), (3, 4)]);
        assert_eq!(parse_pairs("s(1,2)^3").unwrap(), vec![(1, 2); 3]);
        assert_eq!(parse_pairs("s(1,2)^-2 s(2,1)^0").unwrap(), vec![(1, 2); 2]);
        assert!(parse_pairs("s(1,2").is_err());
        assert!(parse_pairs("t(1,2)").is_err());
        assert!(parse_pairs("* s(1,2)").is_err());
        assert!(parse_pairs("s(-1,2)").is_err());
        match parse_pairs("s(1,2) x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn validation() {
        assert!(CactusWord::parse(4, "s(1,1)").is_err());
        assert!(CactusWord::parse(1, "").is_err());
        assert!(ClassicCactusWord::parse(4, "s(3,1)").is_err());
        assert!(ClassicCactusWord::parse(4, "s(1,3)").is_ok());
    }

    #[test]
    fn display_round_trip() {
        let w = CactusWord::parse(5, "s(5,2) * s(1,3)^2").unwrap();
        assert_eq!(CactusWord::parse(5, &w.to_string()).unwrap(), w);
        assert_eq!(CactusWord::empty(3).unwrap().to_string(), "");
    }

    #[test]
    fn letter_geometry() {
        let l = CactusLetter::new(3, 1);
        assert_eq!(l.support_len(4), 3);
        assert_eq!(l.support(4).seq(), &[3, 4, 1]);
        assert_eq!(l.lifted_support(4).elems(), &[3, 4, 5]);
        assert_eq!(l.shifted(4, 1), CactusLetter::new(4, 2));
        assert_eq!(CactusLetter::new(4, 1).shifted(4, 1), CactusLetter::new(1, 2));
    }
}
