//! Periodic hyperplane arrangements on the W-invariant subspace.
//!
//! A family `(u, b)` stands for the walls `<u, delta> in Z + b`. Points are given in
//! lattice coordinates and must be W-invariant; walls are reported in the coordinates
//! of the invariant basis (one block-constant vector per GL factor, then torus units).

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::hyperplane::{segment_crossings, AffineHyperplane, Crossing};
use crate::exact::rat::{ceil_i64, floor_i64, primitive, rat, Rat, RatVec, Weight};
use crate::root_datum::GroupDatum;
use crate::zonotope::Zonotope;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallFamily {
    /// Normal in the full lattice.
    pub u: Weight,
    #[serde(serialize_with = "crate::io::ser_rat")]
    pub base: Rat,
    /// Primitive restricted normal in invariant coordinates.
    pub normal: Weight,
    /// Signed factor with `<u, b_k>_k = scale * normal`.
    pub scale: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicArrangement {
    pub group: GroupDatum,
    pub families: Vec<WallFamily>,
}

impl PeriodicArrangement {
    pub fn new(group: GroupDatum, families: Vec<(Weight, Rat)>) -> Result<Self> {
        let basis = group.invariant_subspace_basis();
        let mut out = Vec::new();
        for (u, base) in families {
            let n: Weight = basis
                .iter()
                .map(|b| b.dot_int(&u).to_integer().try_into().map_err(|_| Error::internal("overflow")))
                .collect::<Result<_>>()?;
            let (normal, scale) = primitive(&n);
            if scale == 0 {
                if base.is_integer() {
                    return Err(Error::Hypothesis(format!(
                        "the invariant subspace lies inside the walls of normal {u:?}"
                    )));
                }
                continue;
            }
            out.push(WallFamily { u, base, normal, scale });
        }
        Ok(PeriodicArrangement { group, families: out })
    }

    /// Walls `<u, delta> in Z + h(u)` over the facet normals of a zonotope.
    pub fn from_zonotope_supports(group: GroupDatum, z: &Zonotope) -> Result<Self> {
        let fam = z.canonical_normals()?.into_iter().map(|u| {
            let h = z.support_int(&u);
            (u, h)
        });
        Self::new(group, fam.collect())
    }

    pub fn coords(&self, delta: &RatVec) -> Result<RatVec> {
        self.group.check_dim(delta.len())?;
        Ok(RatVec(self.group.invariant_coords(delta)?))
    }

    fn level(f: &WallFamily, y: &RatVec) -> Rat {
        y.dot_int(&f.normal) * rat(f.scale) - &f.base
    }

    fn wall(f: &WallFamily, j: i64) -> Result<AffineHyperplane> {
        AffineHyperplane::new(&f.normal, (rat(j) + &f.base) / rat(f.scale))
    }

    /// The first wall containing `delta`, if any.
    pub fn wall_at(&self, delta: &RatVec) -> Result<Option<AffineHyperplane>> {
        let y = self.coords(delta)?;
        for f in &self.families {
            let c = Self::level(f, &y);
            if c.is_integer() {
                let j = floor_i64(&c)?;
                return Ok(Some(Self::wall(f, j)?));
            }
        }
        Ok(None)
    }

    pub fn contains(&self, delta: &RatVec) -> Result<bool> {
        Ok(self.wall_at(delta)?.is_some())
    }

    /// Walls meeting the closed segment, deduplicated, in invariant coordinates.
    pub fn walls_meeting(&self, a: &RatVec, b: &RatVec) -> Result<Vec<AffineHyperplane>> {
        let ya = self.coords(a)?;
        let yb = self.coords(b)?;
        let mut set = BTreeSet::new();
        for f in &self.families {
            let ca = Self::level(f, &ya);
            let cb = Self::level(f, &yb);
            let (lo, hi) = if ca <= cb { (ca, cb) } else { (cb, ca) };
            for j in ceil_i64(&lo)?..=floor_i64(&hi)? {
                set.insert(Self::wall(f, j)?);
            }
        }
        Ok(set.into_iter().collect())
    }

    /// Crossings of the open segment, ordered; endpoints must be off every wall.
    pub fn crossings(&self, a: &RatVec, b: &RatVec) -> Result<Vec<Crossing>> {
        let walls = self.walls_meeting(a, b)?;
        let ya = self.coords(a)?;
        let yb = self.coords(b)?;
        segment_crossings(&ya, &yb, &walls).map_err(|e| match e {
            Error::OnWall { point: _, wall } => {
                let p = if walls.iter().any(|w| w.contains(&ya)) { a } else { b };
                Error::OnWall { point: p.to_string(), wall }
            }
            e => e,
        })
    }

    /// Number of walls separating two points off the arrangement.
    pub fn separation_distance(&self, a: &RatVec, b: &RatVec) -> Result<usize> {
        Ok(self.crossings(a, b)?.len())
    }

    /// Smallest `s > 0` with `p + s * dir` on a wall.
    pub fn first_hit(&self, p: &RatVec, dir: &RatVec) -> Result<Option<Rat>> {
        let y = self.coords(p)?;
        let dy = self.coords(dir)?;
        let mut best: Option<Rat> = None;
        for f in &self.families {
            let m = dy.dot_int(&f.normal) * rat(f.scale);
            if m.is_zero() {
                continue;
            }
            let c = Self::level(f, &y);
            let k = if m.is_positive() { rat(floor_i64(&c)? + 1) } else { rat(ceil_i64(&c)? - 1) };
            let s = (k - c) / m;
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
        }
        Ok(best)
    }

    /// For a one-dimensional invariant subspace: wall positions in `[0, 1)`.
    pub fn walls_in_unit_period(&self) -> Result<Vec<Rat>> {
        let basis = self.group.invariant_subspace_basis();
        if basis.len() != 1 {
            return Err(Error::Dimension { expected: 1, got: basis.len() });
        }
        let mut set = BTreeSet::new();
        for f in &self.families {
            let s = f.scale.abs();
            for j in 0..s {
                let y = (rat(j) + &f.base) / rat(f.scale);
                set.insert(&y - Rat::from_integer(y.floor().to_integer()));
            }
        }
        Ok(set.into_iter().collect())
    }
}
