use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::linalg::primitive_from_rat;
use super::lp::{lp_optimize, LpOutcome, Sense};
use super::rat::{floor_i64, ceil_i64, rat, Rat, RatVec, Weight};
use crate::error::{Error, Result};

/// `<normal, x> <= bound`, or `< bound` when not closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: RatVec,
    pub bound: Rat,
    pub closed: bool,
}

impl HalfSpace {
    pub fn new(normal: RatVec, bound: Rat, closed: bool) -> Self {
        HalfSpace { normal, bound, closed }
    }

    pub fn closed(normal: RatVec, bound: Rat) -> Self {
        Self::new(normal, bound, true)
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        let v = self.normal.dot(x);
        if self.closed {
            v <= self.bound
        } else {
            v < self.bound
        }
    }

    pub fn is_tight(&self, x: &RatVec) -> bool {
        self.normal.dot(x) == self.bound
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HalfSpaceSystem {
    pub dim: usize,
    pub halfspaces: Vec<HalfSpace>,
}

impl HalfSpaceSystem {
    pub fn new(dim: usize) -> Self {
        HalfSpaceSystem { dim, halfspaces: Vec::new() }
    }

    pub fn push(&mut self, h: HalfSpace) -> Result<()> {
        if h.normal.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: h.normal.len() });
        }
        self.halfspaces.push(h);
        Ok(())
    }

    /// Adds `<a,x> = b` as a pair of closed half-spaces.
    pub fn push_eq(&mut self, a: RatVec, b: Rat) -> Result<()> {
        self.push(HalfSpace::closed(-&a, -b.clone()))?;
        self.push(HalfSpace::closed(a, b))
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        self.halfspaces.iter().all(|h| h.contains(x))
    }

    pub fn contains_int(&self, x: &[i64]) -> bool {
        self.contains(&RatVec::from_ints(x))
    }

    /// The same system with every half-space closed.
    pub fn closure(&self) -> Self {
        let mut s = self.clone();
        for h in &mut s.halfspaces {
            h.closed = true;
        }
        s
    }

    /// Translates the solution set by `d`.
    pub fn translate(&self, d: &RatVec) -> Self {
        let mut s = self.clone();
        for h in &mut s.halfspaces {
            h.bound = &h.bound + h.normal.dot(d);
        }
        s
    }
}

/// An integer half-space `<a, x> <= b` equivalent on lattice points.
struct IntHalfSpace {
    a: Vec<i128>,
    b: i128,
}

fn integerize(h: &HalfSpace) -> Result<IntHalfSpace> {
    let prim: Vec<BigInt> = primitive_from_rat(&h.normal.0);
    // prim = s * normal for some positive or negative rational s
    let k = h
        .normal
        .0
        .iter()
        .zip(&prim)
        .find(|(x, _)| !num_traits::Zero::is_zero(*x))
        .map(|(x, p)| Rat::from_integer(p.clone()) / x)
        .ok_or_else(|| Error::internal("zero half-space normal"))?;
    let mut bound = &h.bound * &k;
    let mut a = prim;
    if k.is_negative() {
        // inequality flips; restore the <= direction
        a = a.into_iter().map(|x| -x).collect();
        bound = -bound;
    }
    let b = if h.closed {
        bound.floor().to_integer()
    } else {
        bound.ceil().to_integer() - BigInt::one()
    };
    let conv = |x: &BigInt| x.to_i128().ok_or_else(|| Error::internal("half-space coefficient overflow"));
    Ok(IntHalfSpace { a: a.iter().map(conv).collect::<Result<_>>()?, b: conv(&b)? })
}

/// Bounding box of the closure of the system, or None if it is empty.
pub fn bounding_box(sys: &HalfSpaceSystem) -> Result<Option<Vec<(i64, i64)>>> {
    let closed = sys.closure();
    let mut bx = Vec::with_capacity(sys.dim);
    for i in 0..sys.dim {
        let mut e = RatVec::zeros(sys.dim);
        e.0[i] = rat(1);
        let hi = match lp_optimize(&e, &closed, Sense::Max)? {
            LpOutcome::Optimal(v, _) => floor_i64(&v)?,
            LpOutcome::Infeasible => return Ok(None),
            LpOutcome::Unbounded => return Err(Error::Unbounded(format!("+e{i}"))),
        };
        let lo = match lp_optimize(&e, &closed, Sense::Min)? {
            LpOutcome::Optimal(v, _) => ceil_i64(&v)?,
            LpOutcome::Infeasible => return Ok(None),
            LpOutcome::Unbounded => return Err(Error::Unbounded(format!("-e{i}"))),
        };
        if lo > hi {
            return Ok(None);
        }
        bx.push((lo, hi));
    }
    Ok(Some(bx))
}

/// All integer points of a bounded system, sorted lexicographically.
pub fn lattice_points(sys: &HalfSpaceSystem) -> Result<Vec<Weight>> {
    if sys.dim == 0 {
        return Ok(if sys.contains(&RatVec(Vec::new())) { vec![Vec::new()] } else { Vec::new() });
    }
    let Some(bx) = bounding_box(sys)? else {
        return Ok(Vec::new());
    };
    let ints = sys.halfspaces.iter().map(integerize).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let mut cur: Vec<i64> = bx.iter().map(|b| b.0).collect();
    'scan: loop {
        let ok = ints.iter().all(|h| {
            let s: i128 = h.a.iter().zip(&cur).map(|(a, &x)| a * x as i128).sum();
            s <= h.b
        });
        if ok {
            out.push(cur.clone());
        }
        // odometer with the last coordinate fastest, giving lexicographic order
        let mut i = sys.dim;
        loop {
            if i == 0 {
                break 'scan;
            }
            i -= 1;
            if cur[i] < bx[i].1 {
                cur[i] += 1;
                for j in i + 1..sys.dim {
                    cur[j] = bx[j].0;
                }
                break;
            }
        }
    }
    Ok(out)
}
