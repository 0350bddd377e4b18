use std::fmt;

use num_traits::{Signed, Zero};

use super::rat::{fmt_weight, primitive, rat, Rat, RatVec, Weight};
use crate::error::{Error, Result};

/// `{x : <normal, x> = offset}` with a primitive normal whose first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineHyperplane {
    pub normal: Weight,
    pub offset: Rat,
}

impl AffineHyperplane {
    /// Normalizes `<normal, x> = offset`.
    pub fn new(normal: &[i64], offset: Rat) -> Result<Self> {
        let (prim, s) = primitive(normal);
        if s == 0 {
            return Err(Error::internal("hyperplane with zero normal"));
        }
        Ok(AffineHyperplane { normal: prim, offset: offset / rat(s) })
    }

    /// Signed value `<normal, x> - offset`.
    pub fn eval(&self, x: &RatVec) -> Rat {
        x.dot_int(&self.normal) - &self.offset
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        self.eval(x).is_zero()
    }
}

impl fmt::Display for AffineHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, x> = {}", fmt_weight(&self.normal), self.offset)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub wall: AffineHyperplane,
    pub t: Rat,
}

/// Walls met by the open segment from `a` to `b`, ordered by the segment parameter.
pub fn segment_crossings(a: &RatVec, b: &RatVec, walls: &[AffineHyperplane]) -> Result<Vec<Crossing>> {
    let mut out = Vec::new();
    for w in walls {
        let fa = w.eval(a);
        let fb = w.eval(b);
        if fa.is_zero() || fb.is_zero() {
            if fa.is_zero() && fb.is_zero() && a != b {
                return Err(Error::DegenerateSegment(w.to_string()));
            }
            let point = if fa.is_zero() { a } else { b };
            return Err(Error::OnWall { point: point.to_string(), wall: format!("wall {w}") });
        }
        if fa.is_positive() != fb.is_positive() {
            let t = &fa / (&fa - &fb);
            out.push(Crossing { wall: w.clone(), t });
        }
    }
    out.sort_by(|x, y| x.t.cmp(&y.t).then_with(|| x.wall.cmp(&y.wall)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::frac;

    fn half_walls() -> Vec<AffineHyperplane> {
        (-3..4).map(|k| AffineHyperplane::new(&[1], frac(2 * k + 1, 2)).unwrap()).collect()
    }

    #[test]
    fn crosses_two_half_integers() {
        let a = RatVec::from_fracs(&[(1, 5)]);
        let b = RatVec::from_fracs(&[(23, 10)]);
        let c = segment_crossings(&a, &b, &half_walls()).unwrap();
        let offs: Vec<Rat> = c.iter().map(|x| x.wall.offset.clone()).collect();
        assert_eq!(offs, vec![frac(1, 2), frac(3, 2)]);
        assert_eq!(c[0].t, frac(3, 21));
        assert_eq!(c[1].t, frac(13, 21));
    }

    #[test]
    fn trivial_segments() {
        let a = RatVec::from_fracs(&[(1, 5)]);
        assert!(segment_crossings(&a, &a, &half_walls()).unwrap().is_empty());
        let b = RatVec::from_fracs(&[(2, 5)]);
        assert!(segment_crossings(&a, &b, &half_walls()).unwrap().is_empty());
    }

    #[test]
    fn endpoint_and_degenerate() {
        let a = RatVec::from_fracs(&[(1, 2)]);
        let b = RatVec::from_ints(&[2]);
        assert!(matches!(segment_crossings(&a, &b, &half_walls()), Err(Error::OnWall { .. })));
        let w = vec![AffineHyperplane::new(&[1, 0], frac(1, 2)).unwrap()];
        let p = RatVec::from_fracs(&[(1, 2), (0, 1)]);
        let q = RatVec::from_fracs(&[(1, 2), (1, 1)]);
        assert!(matches!(segment_crossings(&p, &q, &w), Err(Error::DegenerateSegment(_))));
    }

    #[test]
    fn normalization() {
        let h = AffineHyperplane::new(&[-2, 4], rat(3)).unwrap();
        assert_eq!(h.normal, vec![1, -2]);
        assert_eq!(h.offset, frac(-3, 2));
    }
}
