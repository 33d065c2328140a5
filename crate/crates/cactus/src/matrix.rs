//! Dense square matrices over arbitrary-precision integers.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zero(dim);
        for k in 0..dim {
            m.data[k * dim + k] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged or not square.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix {
            dim,
            data: rows.into_iter().flatten().map(BigInt::from).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.dim + c] = v;
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|r| {
            (0..self.dim).all(|c| {
                let v = self.get(r, c);
                if r == c {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        })
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|k| self.get(k, k).clone()).sum()
    }

    pub fn pow(&self, mut e: u32) -> IntMatrix {
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Block diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let d = self.dim + other.dim;
        let mut m = IntMatrix::zero(d);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.dim {
            for c in 0..other.dim {
                m.set(self.dim + r, self.dim + c, other.get(r, c).clone());
            }
        }
        m
    }

    /// Row-major decimal strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c).to_string()).collect())
            .collect()
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = IntMatrix::zero(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * d + c] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.to_string_rows().iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_powers() {
        let a = IntMatrix::from_rows(vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(a.pow(5), IntMatrix::from_rows(vec![vec![1, 5], vec![0, 1]]));
        assert!(a.pow(0).is_identity());
        assert_eq!(a.trace(), BigInt::from(2));
        let s = a.direct_sum(&IntMatrix::identity(1));
        assert_eq!(s.dim(), 3);
        assert_eq!(s.to_string_rows()[0], vec!["1", "1", "0"]);
    }
}
