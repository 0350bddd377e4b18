//! Products of general-linear groups and a torus: roots, rho, Weyl group, dominance.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rat::{fmt_weight, frac, rat, Rat, RatVec, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDatum {
    pub gl_factors: Vec<usize>,
    #[serde(default)]
    pub torus_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftResult {
    Vanishes,
    Dominant { weight: Weight, sign: i64 },
}

impl GroupDatum {
    pub fn new(gl_factors: Vec<usize>, torus_rank: usize) -> Result<Self> {
        if gl_factors.contains(&0) {
            return Err(Error::parse("GL factor of size 0"));
        }
        Ok(GroupDatum { gl_factors, torus_rank })
    }

    pub fn torus(rank: usize) -> Self {
        GroupDatum { gl_factors: Vec::new(), torus_rank: rank }
    }

    pub fn gl(n: usize) -> Self {
        GroupDatum { gl_factors: vec![n], torus_rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.gl_factors.iter().sum::<usize>() + self.torus_rank
    }

    /// Coordinate ranges of the GL blocks.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.gl_factors
            .iter()
            .map(|&n| {
                let r = start..start + n;
                start += n;
                r
            })
            .collect()
    }

    pub fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::Dimension { expected: self.rank(), got: len });
        }
        Ok(())
    }

    pub fn rho(&self) -> RatVec {
        let mut v = RatVec::zeros(self.rank());
        for b in self.blocks() {
            let n = b.len() as i64;
            for (k, i) in b.enumerate() {
                v.0[i] = frac(n - 1 - 2 * k as i64, 2);
            }
        }
        v
    }

    /// Positive roots `e_i - e_j`, `i < j` in one block.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let r = self.rank();
        let mut out = Vec::new();
        for b in self.blocks() {
            for i in b.clone() {
                for j in i + 1..b.end {
                    let mut w = vec![0; r];
                    w[i] = 1;
                    w[j] = -1;
                    out.push(w);
                }
            }
        }
        out
    }

    /// All roots, positive and negative.
    pub fn roots(&self) -> Vec<Weight> {
        let pos = self.positive_roots();
        let neg = pos.iter().map(|w| w.iter().map(|x| -x).collect());
        pos.iter().cloned().chain(neg).collect()
    }

    pub fn is_dominant(&self, mu: &[i64]) -> bool {
        self.blocks().into_iter().all(|b| mu[b].windows(2).all(|p| p[0] >= p[1]))
    }

    pub fn is_dominant_rat(&self, mu: &RatVec) -> bool {
        self.blocks().into_iter().all(|b| mu.0[b].windows(2).all(|p| p[0] >= p[1]))
    }

    /// Weakly increasing within each block.
    pub fn is_antidominant(&self, mu: &[i64]) -> bool {
        self.blocks().into_iter().all(|b| mu[b].windows(2).all(|p| p[0] <= p[1]))
    }

    pub fn w0_apply(&self, mu: &[i64]) -> Weight {
        let mut v = mu.to_vec();
        for b in self.blocks() {
            v[b].reverse();
        }
        v
    }

    /// The dominant representative of the W-orbit.
    pub fn dominant_rep(&self, mu: &[i64]) -> Weight {
        let mut v = mu.to_vec();
        for b in self.blocks() {
            v[b].sort_unstable_by(|a, b| b.cmp(a));
        }
        v
    }

    pub fn dual_weight(&self, mu: &[i64]) -> Result<Weight> {
        self.check_dim(mu.len())?;
        if !self.is_dominant(mu) {
            return Err(Error::NotDominant(fmt_weight(mu)));
        }
        Ok(self.w0_apply(mu).into_iter().map(|x| -x).collect())
    }

    /// The W-orbit, sorted and without repetition.
    pub fn weyl_orbit(&self, mu: &[i64]) -> Vec<Weight> {
        let mut set = BTreeSet::new();
        set.insert(mu.to_vec());
        for b in self.blocks() {
            let mut next = BTreeSet::new();
            for v in &set {
                for p in permutations(&v[b.clone()]) {
                    let mut w = v.clone();
                    w[b.clone()].copy_from_slice(&p);
                    next.insert(w);
                }
            }
            set = next;
        }
        set.into_iter().collect()
    }

    /// Number of elements of W.
    pub fn weyl_order(&self) -> u64 {
        self.gl_factors.iter().map(|&n| (1..=n as u64).product::<u64>()).product()
    }

    /// Applies every element of W to `mu` (with repetition, |W| results).
    pub fn weyl_images(&self, mu: &[i64]) -> Vec<Weight> {
        let mut out = vec![mu.to_vec()];
        for b in self.blocks() {
            let idx: Vec<usize> = b.clone().collect();
            let perms = permutations(&idx);
            let mut next = Vec::with_capacity(out.len() * perms.len());
            for v in &out {
                for p in &perms {
                    let mut w = v.clone();
                    for (k, &src) in p.iter().enumerate() {
                        w[idx[k]] = v[src];
                    }
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    /// Borel-Weil-Bott: the dominant weight of `w(mu + rho) - rho` and the sign of `w`.
    pub fn dominant_shift(&self, mu: &[i64]) -> ShiftResult {
        let mut out = mu.to_vec();
        let mut sign = 1i64;
        for b in self.blocks() {
            let n = b.len() as i64;
            // entries of mu + rho scaled by 2 to stay integral: 2 mu_k + n - 1 - 2k
            let shifted: Vec<i64> = b
                .clone()
                .enumerate()
                .map(|(k, i)| 2 * mu[i] + n - 1 - 2 * k as i64)
                .collect();
            let mut sorted = shifted.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if sorted.windows(2).any(|p| p[0] == p[1]) {
                return ShiftResult::Vanishes;
            }
            let inv = inversions(&shifted);
            if inv % 2 == 1 {
                sign = -sign;
            }
            for (k, i) in b.enumerate() {
                out[i] = (sorted[k] - (n - 1 - 2 * k as i64)) / 2;
            }
        }
        ShiftResult::Dominant { weight: out, sign }
    }

    /// `w * mu = w(mu + rho) - rho` for the permutation `perm` of coordinates (as a rational vector).
    pub fn dot_action(&self, perm: &[usize], mu: &[i64]) -> RatVec {
        let rho = self.rho();
        let shifted = RatVec::from_ints(mu);
        let shifted = &shifted + &rho;
        let mut w = shifted.clone();
        for (k, &src) in perm.iter().enumerate() {
            w.0[k] = shifted.0[src].clone();
        }
        &w - &rho
    }

    /// One block-constant vector per GL factor, then torus unit vectors.
    pub fn invariant_subspace_basis(&self) -> Vec<RatVec> {
        let r = self.rank();
        let mut out = Vec::new();
        for b in self.blocks() {
            let mut v = RatVec::zeros(r);
            for i in b {
                v.0[i] = rat(1);
            }
            out.push(v);
        }
        let off = r - self.torus_rank;
        for k in 0..self.torus_rank {
            let mut v = RatVec::zeros(r);
            v.0[off + k] = rat(1);
            out.push(v);
        }
        out
    }

    pub fn is_invariant(&self, v: &RatVec) -> bool {
        self.blocks().into_iter().all(|b| v.0[b].windows(2).all(|p| p[0] == p[1]))
    }

    /// Coordinates of an invariant vector in the invariant basis.
    pub fn invariant_coords(&self, v: &RatVec) -> Result<Vec<Rat>> {
        if !self.is_invariant(v) {
            return Err(Error::NotInvariant(v.to_string()));
        }
        let mut c: Vec<Rat> = self.blocks().into_iter().map(|b| v.0[b.start].clone()).collect();
        let off = self.rank() - self.torus_rank;
        c.extend(v.0[off..].iter().cloned());
        Ok(c)
    }

    /// An invariant lattice vector from its invariant coordinates.
    pub fn invariant_from_coords(&self, c: &[Rat]) -> RatVec {
        let basis = self.invariant_subspace_basis();
        let mut v = RatVec::zeros(self.rank());
        for (b, x) in basis.iter().zip(c) {
            v = &v + &b.scale(x);
        }
        v
    }
}

fn inversions(v: &[i64]) -> usize {
    let mut n = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] < v[j] {
                n += 1;
            }
        }
    }
    n
}

/// All permutations of a slice, in lexicographic order of positions.
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head.clone());
            out.push(p);
        }
    }
    out
}
