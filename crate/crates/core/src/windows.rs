//! The polytope nabla, half-open windows, and window bases of irreducibles.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::arrangement::PeriodicArrangement;
use crate::error::{Error, Result};
use crate::exact::polytope::{lattice_points, HalfSpace, HalfSpaceSystem};
use crate::exact::rat::{frac, rat, Rat, RatVec, Weight};
use crate::rep_weights::{VirtualClass, WeightMultiset};
use crate::root_datum::GroupDatum;
use crate::zonotope::{FacetData, Zonotope};

/// Everything derived from a quasi-symmetric representation that windows need.
#[derive(Clone, Debug)]
pub struct WindowModel {
    pub rep: WeightMultiset,
    pub zonotope: Zonotope,
    pub facets: Vec<FacetData>,
    pub vclass: VirtualClass,
    /// `eta` per facet normal, keyed like `facets`.
    pub eta: BTreeMap<Weight, Rat>,
    pub rho: RatVec,
    /// A generic point of the invariant subspace.
    pub reference: RatVec,
}

impl WindowModel {
    pub fn new(rep: &WeightMultiset) -> Result<Self> {
        let unbalanced = rep.unbalanced_lines();
        if let Some((dir, sum)) = unbalanced.first() {
            return Err(Error::Hypothesis(format!(
                "not quasi-symmetric: weights on the line through {dir:?} sum to {sum:?}"
            )));
        }
        let zonotope = Zonotope::of_rep(rep);
        if !zonotope.spans_ambient() {
            return Err(Error::Hypothesis(format!(
                "weights span a rank-{} subspace of a rank-{} lattice",
                zonotope.span_rank(),
                zonotope.dim
            )));
        }
        let reference = zonotope
            .sample_generic_in_invariants(&rep.group)?
            .ok_or_else(|| Error::Hypothesis("no generic point in the invariant subspace".into()))?;
        let facets = zonotope.facets()?;
        let vclass = VirtualClass::of_rep(rep);
        let eta = facets.iter().map(|f| (f.normal.clone(), vclass.eta(&f.normal))).collect();
        Ok(WindowModel {
            rep: rep.clone(),
            rho: rep.group.rho(),
            zonotope,
            facets,
            vclass,
            eta,
            reference,
        })
    }

    pub fn group(&self) -> &GroupDatum {
        &self.rep.group
    }

    pub fn rank(&self) -> usize {
        self.rep.rank()
    }

    /// Closed system `<u, chi> <= eta_u / 2` over all facet normals.
    pub fn nabla_halfspaces(&self) -> HalfSpaceSystem {
        let mut sys = HalfSpaceSystem::new(self.rank());
        for f in &self.facets {
            let bound = &self.eta[&f.normal] / rat(2);
            sys.halfspaces.push(HalfSpace::closed(RatVec::from_ints(&f.normal), bound));
        }
        sys
    }

    pub fn check_delta(&self, delta: &RatVec) -> Result<()> {
        self.group().check_dim(delta.len())?;
        if !self.group().is_invariant(delta) {
            return Err(Error::NotInvariant(delta.to_string()));
        }
        Ok(())
    }

    /// Lattice points of the closed polytope `delta + nabla`.
    pub fn nabla_points(&self, delta: &RatVec) -> Result<Vec<Weight>> {
        lattice_points(&self.nabla_halfspaces().translate(delta))
    }

    /// No lattice point of `delta + nabla` lies on a facet hyperplane.
    pub fn boundary_free(&self, delta: &RatVec) -> Result<bool> {
        self.check_delta(delta)?;
        let sys = self.nabla_halfspaces().translate(delta);
        let pts = lattice_points(&sys)?;
        Ok(!pts.iter().any(|p| {
            let x = RatVec::from_ints(p);
            sys.halfspaces.iter().any(|h| h.is_tight(&x))
        }))
    }

    /// Dominant lattice points of `-rho + delta + (1/2) Sigma`, half-open per `eps` when given.
    pub fn window_weights(&self, delta: &RatVec, eps: Option<&RatVec>) -> Result<Vec<Weight>> {
        self.check_delta(delta)?;
        if let Some(e) = eps {
            self.group().check_dim(e.len())?;
        } else if !self.boundary_free(delta)? {
            return Err(Error::OnWall {
                point: delta.to_string(),
                wall: "the boundary of delta + nabla, which holds a lattice point".into(),
            });
        }
        let shift = delta - &self.rho;
        let mut sys = HalfSpaceSystem::new(self.rank());
        for f in &self.facets {
            let n = RatVec::from_ints(&f.normal);
            let closed = match eps {
                None => true,
                Some(e) => {
                    let s = n.dot(e);
                    if s.is_zero() {
                        return Err(Error::NotGeneric(format!("orientation {e}")));
                    }
                    s.is_positive()
                }
            };
            let bound = &f.support / rat(2) + n.dot(&shift);
            sys.halfspaces.push(HalfSpace::new(n, bound, closed));
        }
        self.push_dominance(&mut sys);
        lattice_points(&sys)
    }

    fn push_dominance(&self, sys: &mut HalfSpaceSystem) {
        for b in self.group().blocks() {
            for i in b.start..b.end.saturating_sub(1) {
                let mut n = RatVec::zeros(self.rank());
                n.0[i] = rat(-1);
                n.0[i + 1] = rat(1);
                sys.halfspaces.push(HalfSpace::closed(n, Rat::zero()));
            }
        }
    }

    /// The W-orbit of the dominant window: an independent description of `delta + nabla`.
    pub fn orbit_window_oracle(&self, delta: &RatVec) -> Result<BTreeSet<Weight>> {
        let dom = self.window_weights(delta, None)?;
        Ok(dom.iter().flat_map(|w| self.group().weyl_orbit(w)).collect())
    }

    /// Walls `<u, delta> in Z + eta_u / 2` restricted to the invariant subspace.
    pub fn delta_arrangement(&self) -> Result<PeriodicArrangement> {
        let fam = self
            .zonotope
            .canonical_normals()?
            .into_iter()
            .map(|u| {
                let b = &self.eta[&u] / rat(2);
                (u, b)
            })
            .collect();
        PeriodicArrangement::new(self.group().clone(), fam)
    }

    /// Smallest `t` in `(0, 1]` with `delta + t * dir` closed-window-equal to the half-open
    /// window at `delta` oriented by `dir`.
    pub fn nudge(&self, delta: &RatVec, dir: &RatVec) -> Result<RatVec> {
        let arr = self.delta_arrangement()?;
        let t = match arr.first_hit(delta, dir)? {
            Some(s) if s <= rat(1) => s / rat(2),
            _ => frac(1, 2),
        };
        Ok(delta + &dir.scale(&t))
    }
}
