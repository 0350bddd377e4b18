use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational.
pub type Rat = BigRational;

/// Integer lattice vector (a character or cocharacter).
pub type Weight = Vec<i64>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. Decimal notation is rejected.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

pub fn floor_i64(x: &Rat) -> Result<i64> {
    x.floor()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::internal("rational out of i64 range"))
}

pub fn ceil_i64(x: &Rat) -> Result<i64> {
    x.ceil()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::internal("rational out of i64 range"))
}

pub fn dot_int(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divides by the gcd and makes the first nonzero entry positive.
/// Returns the primitive vector and the signed factor `s` with `v = s * prim`.
pub fn primitive(v: &[i64]) -> (Weight, i64) {
    let g = gcd_all(v);
    if g == 0 {
        return (v.to_vec(), 0);
    }
    let sign = v.iter().find(|&&x| x != 0).map_or(1, |x| x.signum());
    let s = g * sign;
    (v.iter().map(|x| x / s).collect(), s)
}

pub fn neg_weight(v: &[i64]) -> Weight {
    v.iter().map(|x| -x).collect()
}

pub fn fmt_weight(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Exact rational vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVec(pub Vec<Rat>);

impl RatVec {
    pub fn zeros(n: usize) -> Self {
        RatVec(vec![Rat::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RatVec(v.iter().map(|&x| rat(x)).collect())
    }

    pub fn from_fracs(v: &[(i64, i64)]) -> Self {
        RatVec(v.iter().map(|&(p, q)| frac(p, q)).collect())
    }

    /// Parses a comma-separated list such as `"1/2,1/2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(RatVec(Vec::new()));
        }
        s.split(',').map(parse_rat).collect::<Result<Vec<_>>>().map(RatVec)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_int(&self, w: &[i64]) -> Rat {
        self.0
            .iter()
            .zip(w)
            .filter(|(_, &b)| b != 0)
            .map(|(a, &b)| a * rat(b))
            .sum()
    }

    pub fn scale(&self, c: &Rat) -> RatVec {
        RatVec(self.0.iter().map(|a| a * c).collect())
    }

    pub fn add_int(&self, w: &[i64]) -> RatVec {
        RatVec(self.0.iter().zip(w).map(|(a, &b)| a + rat(b)).collect())
    }

    /// `(1 - t) a + t b`
    pub fn lerp(&self, other: &RatVec, t: &Rat) -> RatVec {
        let s = Rat::one() - t;
        RatVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a * &s + b * t)
                .collect(),
        )
    }

    /// Some(integer vector) when every entry is integral.
    pub fn to_weight(&self) -> Option<Weight> {
        self.0
            .iter()
            .map(|x| {
                if x.is_integer() {
                    x.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|x| x.to_string()).collect()
    }

    pub fn abs_max(&self) -> Rat {
        self.0.iter().map(|x| x.abs()).max().unwrap_or_else(Rat::zero)
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

impl Add for &RatVec {
    type Output = RatVec;
    fn add(self, rhs: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVec {
    type Output = RatVec;
    fn sub(self, rhs: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        RatVec(self.0.iter().map(|a| -a).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/4").unwrap(), frac(3, 4));
        assert_eq!(parse_rat(" -6/8 ").unwrap(), frac(-3, 4));
        assert_eq!(parse_rat("5").unwrap(), rat(5));
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert_eq!(frac(1, 2).to_string(), "1/2");
        assert_eq!(RatVec::parse("1/2, 1/2").unwrap(), RatVec::from_fracs(&[(1, 2), (1, 2)]));
        assert_eq!(RatVec::from_fracs(&[(-1, 2), (4, 2)]).to_string(), "(-1/2,2)");
    }

    #[test]
    fn primitive_normalization() {
        assert_eq!(primitive(&[-2, 4, 0]), (vec![1, -2, 0], -2));
        assert_eq!(primitive(&[0, 3]), (vec![0, 1], 3));
        assert_eq!(primitive(&[0, 0]).1, 0);
    }
}
