//! Two-phase exact simplex with Bland's rule.

use num_traits::{Signed, Zero};

use super::polytope::HalfSpaceSystem;
use super::rat::{Rat, RatVec};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(Rat, RatVec),
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            LpOutcome::Optimal(v, _) => Some(v),
            _ => None,
        }
    }
}

struct Tableau {
    t: Vec<Vec<Rat>>,
    z: Vec<Rat>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.ncols
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.t[r][c].clone();
        for x in self.t[r].iter_mut() {
            *x /= &p;
        }
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, q) in row.iter_mut().zip(&prow) {
                if !q.is_zero() {
                    *x -= &f * q;
                }
            }
        }
        if !self.z[c].is_zero() {
            let f = self.z[c].clone();
            for (x, q) in self.z.iter_mut().zip(&prow) {
                if !q.is_zero() {
                    *x -= &f * q;
                }
            }
        }
        self.basis[r] = c;
    }

    fn set_objective(&mut self, cost: &[Rat], allowed: usize) {
        let rhs = self.rhs();
        let mut z = vec![Rat::zero(); rhs + 1];
        z[..allowed].clone_from_slice(&cost[..allowed]);
        for (row, &b) in self.t.iter().zip(&self.basis) {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (j, zj) in z.iter_mut().enumerate() {
                if j < allowed || j == rhs {
                    *zj -= cb * &row[j];
                }
            }
        }
        self.z = z;
    }

    /// Minimizes over columns `< allowed`; returns false when unbounded. Dantzig pricing,
    /// with Bland's rule after a run of degenerate pivots so cycling cannot occur.
    fn run(&mut self, allowed: usize) -> bool {
        let rhs = self.rhs();
        let mut degenerate = 0usize;
        loop {
            let entering = if degenerate < 2 * self.t.len() + 8 {
                let mut best: Option<usize> = None;
                for j in 0..allowed {
                    if self.z[j].is_negative() && best.is_none_or(|b| self.z[j] < self.z[b]) {
                        best = Some(j);
                    }
                }
                best
            } else {
                (0..allowed).find(|&j| self.z[j].is_negative())
            };
            let Some(c) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rat)> = None;
            for (i, row) in self.t.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, ratio)) => {
                    if ratio.is_zero() {
                        degenerate += 1;
                    } else {
                        degenerate = 0;
                    }
                    self.pivot(r, c)
                }
                None => return false,
            }
        }
    }
}

/// Optimizes `objective · x` over the closure of `sys` (open flags are ignored).
pub fn lp_optimize(objective: &RatVec, sys: &HalfSpaceSystem, sense: Sense) -> Result<LpOutcome> {
    let n = sys.dim;
    if objective.len() != n {
        return Err(Error::Dimension { expected: n, got: objective.len() });
    }
    let m = sys.halfspaces.len();
    let nvar = 2 * n + m;
    let ncols = nvar + m;
    let mut t = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for (i, h) in sys.halfspaces.iter().enumerate() {
        let mut row = vec![Rat::zero(); ncols + 1];
        for j in 0..n {
            row[j] = h.normal.0[j].clone();
            row[n + j] = -h.normal.0[j].clone();
        }
        row[2 * n + i] = Rat::from_integer(1.into());
        row[ncols] = h.bound.clone();
        if h.bound.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
            // the slack has coefficient -1 here, so this row starts on an artificial
            row[nvar + i] = Rat::from_integer(1.into());
            basis.push(nvar + i);
        } else {
            basis.push(2 * n + i);
        }
        t.push(row);
    }
    let mut tab = Tableau { t, z: Vec::new(), basis, ncols };

    let mut phase1 = vec![Rat::zero(); ncols];
    for c in phase1.iter_mut().skip(nvar) {
        *c = Rat::from_integer(1.into());
    }
    tab.set_objective(&phase1, nvar);
    tab.run(nvar);
    if !tab.z[ncols].is_zero() {
        return Ok(LpOutcome::Infeasible);
    }
    // drive artificials out of the basis, dropping redundant rows
    let mut i = 0;
    while i < tab.t.len() {
        if tab.basis[i] >= nvar {
            match (0..nvar).find(|&j| !tab.t[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.t.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let flip = sense == Sense::Max;
    let mut cost = vec![Rat::zero(); ncols];
    for j in 0..n {
        let c = if flip { -objective.0[j].clone() } else { objective.0[j].clone() };
        cost[n + j] = -c.clone();
        cost[j] = c;
    }
    tab.set_objective(&cost, nvar);
    if !tab.run(nvar) {
        return Ok(LpOutcome::Unbounded);
    }
    let mut y = vec![Rat::zero(); nvar];
    for (row, &b) in tab.t.iter().zip(&tab.basis) {
        y[b] = row[ncols].clone();
    }
    let x = RatVec((0..n).map(|j| &y[j] - &y[n + j]).collect());
    let value = objective.dot(&x);
    Ok(LpOutcome::Optimal(value, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::polytope::HalfSpace;
    use crate::exact::rat::{frac, rat};

    #[test]
    fn single_lower_bound() {
        let mut s = HalfSpaceSystem::new(1);
        s.push(HalfSpace::closed(RatVec::from_ints(&[-1]), rat(-3))).unwrap();
        let out = lp_optimize(&RatVec::from_ints(&[1]), &s, Sense::Min).unwrap();
        assert_eq!(out, LpOutcome::Optimal(rat(3), RatVec::from_ints(&[3])));
        assert_eq!(lp_optimize(&RatVec::from_ints(&[1]), &s, Sense::Max).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn empty_polyhedron() {
        let mut s = HalfSpaceSystem::new(1);
        s.push(HalfSpace::closed(RatVec::from_ints(&[-1]), rat(-1))).unwrap();
        s.push(HalfSpace::closed(RatVec::from_ints(&[1]), rat(0))).unwrap();
        assert_eq!(lp_optimize(&RatVec::from_ints(&[1]), &s, Sense::Min).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn triangle_vertex() {
        // x, y >= 0, x + 2y <= 4, 3x + y <= 6: max x + y at (8/5, 6/5)
        let mut s = HalfSpaceSystem::new(2);
        for (a, b) in [([-1, 0], 0), ([0, -1], 0), ([1, 2], 4), ([3, 1], 6)] {
            s.push(HalfSpace::closed(RatVec::from_ints(&a), rat(b))).unwrap();
        }
        let out = lp_optimize(&RatVec::from_ints(&[1, 1]), &s, Sense::Max).unwrap();
        assert_eq!(out, LpOutcome::Optimal(frac(14, 5), RatVec::from_fracs(&[(8, 5), (6, 5)])));
    }

    #[test]
    fn fig1_dilation() {
        // min r s.t. (4,-1) = sum a_i b_i, a_i in [-r, 0], b over T*Sym^3 k^2
        let betas: [[i64; 2]; 8] = [[3, 0], [2, 1], [1, 2], [0, 3], [-3, 0], [-2, -1], [-1, -2], [0, -3]];
        let d = betas.len();
        let dim = d + 1;
        let mut s = HalfSpaceSystem::new(dim);
        for k in 0..2 {
            let mut a = RatVec::zeros(dim);
            for (i, b) in betas.iter().enumerate() {
                a.0[i] = rat(b[k]);
            }
            s.push_eq(a, rat([4, -1][k])).unwrap();
        }
        for i in 0..d {
            let mut up = RatVec::zeros(dim);
            up.0[i] = rat(1);
            s.push(HalfSpace::closed(up, rat(0))).unwrap();
            let mut lo = RatVec::zeros(dim);
            lo.0[i] = rat(-1);
            lo.0[d] = rat(-1);
            s.push(HalfSpace::closed(lo, rat(0))).unwrap();
        }
        let mut obj = RatVec::zeros(dim);
        obj.0[d] = rat(1);
        let out = lp_optimize(&obj, &s, Sense::Min).unwrap();
        assert_eq!(out.value(), Some(&frac(3, 4)));
    }

    #[test]
    fn redundant_equalities() {
        let mut s = HalfSpaceSystem::new(2);
        s.push_eq(RatVec::from_ints(&[1, 1]), rat(2)).unwrap();
        s.push_eq(RatVec::from_ints(&[2, 2]), rat(4)).unwrap();
        s.push(HalfSpace::closed(RatVec::from_ints(&[-1, 0]), rat(0))).unwrap();
        s.push(HalfSpace::closed(RatVec::from_ints(&[0, -1]), rat(0))).unwrap();
        let out = lp_optimize(&RatVec::from_ints(&[1, 0]), &s, Sense::Max).unwrap();
        assert_eq!(out.value(), Some(&rat(2)));
    }
}
