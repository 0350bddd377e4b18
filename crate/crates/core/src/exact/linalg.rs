use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::rat::{rat, Rat, RatVec};
use crate::error::{Error, Result};

/// Row-reduces in place; returns the pivot column of each nonzero row.
pub fn rref(m: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rat::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn int_rows(rows: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub fn rank_int(rows: &[Vec<i64>]) -> usize {
    rank(&int_rows(rows))
}

/// Basis of `{x : rows · x = 0}` in `n` unknowns.
pub fn nullspace(rows: &[Vec<Rat>], n: usize) -> Vec<Vec<Rat>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); n];
            x[f] = Rat::one();
            for (row, &p) in m.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

/// Some solution of `rows · x = rhs`, if one exists.
pub fn solve(rows: &[Vec<Rat>], rhs: &[Rat], n: usize) -> Option<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (row, &p) in m.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// Whether `v` lies in the row span of `rows`.
pub fn in_span(rows: &[Vec<Rat>], v: &RatVec) -> bool {
    let mut m = rows.to_vec();
    let r0 = rref(&mut m).len();
    m.push(v.0.clone());
    rank(&m) == r0
}

/// Scales a rational vector to a primitive integer vector (first nonzero entry positive).
pub fn primitive_from_rat(v: &[Rat]) -> Vec<BigInt> {
    let l = v
        .iter()
        .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| num_integer::gcd(acc, x.clone()));
    if g.is_zero() {
        return ints;
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(BigInt::one(), |x| x.signum());
    let s = g * sign;
    ints.into_iter().map(|x| x / &s).collect()
}

/// Dense integer matrix. Wall-crossing matrices are indexed `[target][source]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(r: usize, c: usize) -> Self {
        IntMatrix { rows: vec![vec![BigInt::zero(); c]; r] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        IntMatrix {
            rows: rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows() == self.ncols() && *self == Self::identity(self.nrows())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::Dimension { expected: self.ncols(), got: other.nrows() });
        }
        let mut out = Self::zeros(self.nrows(), other.ncols());
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.rows[k].iter().enumerate() {
                    out.rows[i][j] += a * b;
                }
            }
        }
        Ok(out)
    }

    fn to_rat(&self) -> Vec<Vec<Rat>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect()
    }

    pub fn det(&self) -> Result<BigInt> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(Error::Dimension { expected: n, got: self.ncols() });
        }
        let mut m = self.to_rat();
        let mut d = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != c {
                m.swap(p, c);
                d = -d;
            }
            d *= &m[c][c];
            for i in c + 1..n {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = &m[i][c] / &m[c][c];
                for j in c..n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
        Ok(d.to_integer())
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }

    /// Exact inverse; errors unless the inverse is integral.
    pub fn inverse(&self) -> Result<IntMatrix> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(Error::Dimension { expected: n, got: self.ncols() });
        }
        if n == 0 {
            return Ok(self.clone());
        }
        let mut m: Vec<Vec<Rat>> = self
            .to_rat()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                r
            })
            .collect();
        let pivots = rref(&mut m);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::NotUnimodular);
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let x = &m[i][n + j];
                if !x.is_integer() {
                    return Err(Error::NotUnimodular);
                }
                out.rows[i][j] = x.to_integer();
            }
        }
        Ok(out)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.to_strings() {
            writeln!(f, "[{}]", r.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::frac;

    #[test]
    fn nullspace_of_line() {
        let ns = nullspace(&int_rows(&[vec![1, 2, 0]]), 3);
        assert_eq!(ns.len(), 2);
        for x in ns {
            assert!((&x[0] + rat(2) * &x[1]).is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = int_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(solve(&a, &[rat(3), rat(1)], 2), Some(vec![rat(2), rat(1)]));
        let b = int_rows(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(solve(&b, &[rat(1), rat(3)], 2), None);
    }

    #[test]
    fn inverse_and_det() {
        let m = IntMatrix::from_i64(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(m.det().unwrap(), BigInt::from(1));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let s = IntMatrix::from_i64(&[vec![2, 0], vec![0, 1]]);
        assert_eq!(s.inverse(), Err(Error::NotUnimodular));
        assert!(!IntMatrix::from_i64(&[vec![1, 1], vec![1, 1]]).is_unimodular());
    }

    #[test]
    fn primitive_scaling() {
        let p = primitive_from_rat(&[frac(-1, 2), frac(1, 3)]);
        assert_eq!(p, vec![BigInt::from(3), BigInt::from(-2)]);
    }
}
