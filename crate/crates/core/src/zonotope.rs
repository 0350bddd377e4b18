//! The zonotope `sum [-b_i, 0]` over the weights of `X^v`, its facets and chambers.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::linalg::{in_span, int_rows, nullspace, primitive_from_rat, rank, rref};
use crate::exact::rat::{dot_int, neg_weight, primitive, rat, Rat, RatVec, Weight};
use crate::rep_weights::WeightMultiset;
use crate::root_datum::GroupDatum;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FacetData {
    pub normal: Weight,
    #[serde(serialize_with = "crate::io::ser_rat")]
    pub support: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zonotope {
    pub dim: usize,
    /// Nonzero generators `b_i`; zeros never matter.
    pub generators: Vec<Weight>,
}

impl Zonotope {
    /// The zonotope of `X^v` for user-supplied weights of `X`.
    pub fn of_rep(rep: &WeightMultiset) -> Self {
        Zonotope { dim: rep.rank(), generators: rep.dual_weights().nonzero() }
    }

    pub fn from_generators(dim: usize, generators: Vec<Weight>) -> Self {
        let generators = generators.into_iter().filter(|g| g.iter().any(|&x| x != 0)).collect();
        Zonotope { dim, generators }
    }

    /// `h(u) = max over the zonotope of <u, x> = sum max(0, -<u, b_i>)`.
    pub fn support_value(&self, u: &RatVec) -> Rat {
        self.generators
            .iter()
            .map(|b| -u.dot_int(b))
            .filter(|x| x.is_positive())
            .sum()
    }

    pub fn support_int(&self, u: &[i64]) -> Rat {
        rat(self.generators.iter().map(|b| -dot_int(u, b)).filter(|&x| x > 0).sum())
    }

    pub fn span_rank(&self) -> usize {
        rank(&int_rows(&self.generators))
    }

    pub fn spans_ambient(&self) -> bool {
        self.span_rank() == self.dim
    }

    pub fn in_span(&self, v: &RatVec) -> bool {
        in_span(&int_rows(&self.generators), v)
    }

    /// Distinct primitive directions of the generators.
    pub fn lines(&self) -> Vec<Weight> {
        let set: BTreeSet<Weight> = self.generators.iter().map(|g| primitive(g).0).collect();
        set.into_iter().collect()
    }

    /// Facet normals (both signs, canonical order) with their supports.
    pub fn facets(&self) -> Result<Vec<FacetData>> {
        let k = self.span_rank();
        if k == 0 {
            return Err(Error::Hypothesis("zonotope generators have rank 0".into()));
        }
        let mut basis = int_rows(&self.generators);
        rref(&mut basis);
        let lines = self.lines();
        let mut normals: BTreeSet<Weight> = BTreeSet::new();
        for subset in combinations(lines.len(), k - 1) {
            let rows: Vec<Weight> = subset.iter().map(|&i| lines[i].clone()).collect();
            if rank(&int_rows(&rows)) != k - 1 {
                continue;
            }
            // u = sum c_j basis_j with <u, line> = 0 for each chosen line
            let cond: Vec<Vec<Rat>> = rows
                .iter()
                .map(|l| basis.iter().map(|b| RatVec(b.clone()).dot_int(l)).collect())
                .collect();
            let ns = nullspace(&cond, basis.len());
            let [c] = ns.as_slice() else {
                return Err(Error::internal("facet normal space is not a line"));
            };
            let mut u = vec![Rat::zero(); self.dim];
            for (cj, b) in c.iter().zip(&basis) {
                for (x, y) in u.iter_mut().zip(b) {
                    *x += cj * y;
                }
            }
            let prim = to_i64(&primitive_from_rat(&u))?;
            normals.insert(neg_weight(&prim));
            normals.insert(prim);
        }
        Ok(normals
            .into_iter()
            .map(|n| {
                let support = self.support_int(&n);
                FacetData { normal: n, support }
            })
            .collect())
    }

    /// One normal per antipodal pair: those whose first nonzero entry is positive.
    pub fn canonical_normals(&self) -> Result<Vec<Weight>> {
        Ok(self
            .facets()?
            .into_iter()
            .map(|f| f.normal)
            .filter(|n| n.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
            .collect())
    }

    pub fn is_generic(&self, ell: &RatVec) -> Result<bool> {
        if ell.is_zero() || !self.in_span(ell) {
            return Ok(false);
        }
        Ok(self.facets()?.iter().all(|f| !ell.dot_int(&f.normal).is_zero()))
    }

    /// For every maximal proper subspace `V` spanned by generators, whether some
    /// `lambda` kills `V` and pairs nonzero with `ell`.
    pub fn exists_destabilizing_lambda(&self, ell: &RatVec) -> bool {
        let k = self.span_rank();
        let lines = self.lines();
        let mut seen: BTreeSet<Vec<Weight>> = BTreeSet::new();
        let subsets: Vec<Vec<usize>> = if k == 0 { vec![] } else { combinations(lines.len(), k - 1) };
        for subset in subsets {
            let rows: Vec<Weight> = subset.iter().map(|&i| lines[i].clone()).collect();
            if rank(&int_rows(&rows)) != k.saturating_sub(1) {
                continue;
            }
            // all generator lines inside the span of the chosen ones
            let span_rows = int_rows(&rows);
            let v: Vec<Weight> = lines
                .iter()
                .filter(|l| in_span(&span_rows, &RatVec::from_ints(l)))
                .cloned()
                .collect();
            if !seen.insert(v.clone()) {
                continue;
            }
            let ann = nullspace(&int_rows(&v), self.dim);
            if ann.iter().all(|lam| RatVec(lam.clone()).dot(ell).is_zero()) {
                return false;
            }
        }
        true
    }

    /// Signs of `<u, ell>` over canonical normals; errors when `ell` is not generic.
    pub fn chamber_signature(&self, ell: &RatVec) -> Result<Vec<i8>> {
        if !self.is_generic(ell)? {
            return Err(Error::NotGeneric(ell.to_string()));
        }
        Ok(self
            .canonical_normals()?
            .iter()
            .map(|n| if ell.dot_int(n).is_positive() { 1 } else { -1 })
            .collect())
    }

    /// A generic point of the W-invariant subspace, or None when that subspace
    /// lies in a facet hyperplane (or misses the span).
    pub fn sample_generic_in_invariants(&self, group: &GroupDatum) -> Result<Option<RatVec>> {
        let basis = group.invariant_subspace_basis();
        // restrict to invariant vectors inside the span of the generators
        let ann = nullspace(&int_rows(&self.generators), self.dim);
        let cond: Vec<Vec<Rat>> = ann
            .iter()
            .map(|w| basis.iter().map(|b| RatVec(w.clone()).dot(b)).collect())
            .collect();
        let ys = nullspace(&cond, basis.len());
        let dirs: Vec<RatVec> = ys
            .iter()
            .map(|y| {
                y.iter()
                    .zip(&basis)
                    .fold(RatVec::zeros(self.dim), |acc, (c, b)| &acc + &b.scale(c))
            })
            .collect();
        if dirs.is_empty() {
            return Ok(None);
        }
        let normals = self.canonical_normals()?;
        let mut forms: Vec<Vec<Rat>> = Vec::new();
        for n in &normals {
            let f: Vec<Rat> = dirs.iter().map(|d| d.dot_int(n)).collect();
            if f.iter().all(Zero::is_zero) {
                return Ok(None);
            }
            forms.push(f);
        }
        // moment curve (1, t, t^2, ...) avoids each form for all but finitely many t
        let bound = normals.len() * dirs.len() + 2;
        for t in 1..=bound as i64 {
            let coeffs: Vec<Rat> = (0..dirs.len() as u32).map(|e| rat(t.pow(e))).collect();
            if forms
                .iter()
                .all(|f| !f.iter().zip(&coeffs).map(|(a, c)| a * c).sum::<Rat>().is_zero())
            {
                let p = dirs
                    .iter()
                    .zip(&coeffs)
                    .fold(RatVec::zeros(self.dim), |acc, (d, c)| &acc + &d.scale(c));
                let prim = primitive_from_rat(&p.0);
                return Ok(Some(RatVec(prim.into_iter().map(Rat::from_integer).collect())));
            }
        }
        Err(Error::internal("generic point search exhausted its bound"))
    }
}

fn to_i64(v: &[BigInt]) -> Result<Weight> {
    v.iter()
        .map(|x| x.to_i64().ok_or_else(|| Error::internal("facet normal exceeds i64")))
        .collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}
