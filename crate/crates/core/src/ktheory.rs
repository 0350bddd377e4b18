//! K-theory classes, the (r, p) measure, the rewriting algorithm and wall-crossing matrices.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arrangement::PeriodicArrangement;
use crate::error::{Error, Result};
use crate::exact::hyperplane::AffineHyperplane;
use crate::exact::linalg::IntMatrix;
use crate::exact::lp::{lp_optimize, LpOutcome, Sense};
use crate::exact::polytope::{HalfSpace, HalfSpaceSystem};
use crate::exact::rat::{dot_int, fmt_weight, frac, rat, Rat, RatVec, Weight};
use crate::root_datum::{GroupDatum, ShiftResult};
use crate::windows::WindowModel;

/// Integer combination of classes `V(chi)` with `chi` dominant.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KClass {
    pub terms: BTreeMap<Weight, BigInt>,
}

impl KClass {
    pub fn zero() -> Self {
        KClass::default()
    }

    pub fn single(w: Weight) -> Self {
        let mut k = KClass::zero();
        k.add_term(w, BigInt::one());
        k
    }

    pub fn from_terms(terms: &[(&[i64], i64)]) -> Self {
        let mut k = KClass::zero();
        for (w, c) in terms {
            k.add_term(w.to_vec(), BigInt::from(*c));
        }
        k
    }

    pub fn add_term(&mut self, w: Weight, c: BigInt) {
        let e = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &KClass, c: &BigInt) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn coeff(&self, w: &[i64]) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            write!(f, "V{}", fmt_weight(w))?;
        }
        Ok(())
    }
}

/// Euler characteristic of the line bundle of weight `nu` on the flag variety.
pub fn ch_to_kclass(group: &GroupDatum, nu: &[i64]) -> KClass {
    match group.dominant_shift(nu) {
        ShiftResult::Vanishes => KClass::zero(),
        ShiftResult::Dominant { weight, sign } => {
            let mut k = KClass::zero();
            k.add_term(weight, BigInt::from(sign));
            k
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComplexKind {
    /// Subtracts subsets of the weights pairing negatively with lambda.
    C,
    /// Adds subsets of the weights pairing positively with lambda.
    D,
}

/// Signed subset sums `sum_S (-1)^|S| (sign * sum_{i in S} w_i)`.
fn alternating_subset_sums(ws: &[Weight], sign: i64, dim: usize) -> BTreeMap<Weight, BigInt> {
    let mut sums: BTreeMap<Weight, BigInt> = BTreeMap::new();
    sums.insert(vec![0; dim], BigInt::one());
    for w in ws {
        let mut next = sums.clone();
        for (s, c) in &sums {
            let t: Weight = s.iter().zip(w).map(|(a, b)| a + sign * b).collect();
            let e = next.entry(t.clone()).or_insert_with(BigInt::zero);
            *e -= c;
            if e.is_zero() {
                next.remove(&t);
            }
        }
        sums = next;
    }
    sums
}

/// K-class of the complex `C_{lambda,chi}` or `D^v_{lambda,chi}`.
pub fn border_complex_class(model: &WindowModel, kind: ComplexKind, lambda: &[i64], chi: &[i64]) -> Result<KClass> {
    let group = model.group();
    group.check_dim(lambda.len())?;
    group.check_dim(chi.len())?;
    if !group.is_antidominant(lambda) {
        return Err(Error::NotAntiDominant(fmt_weight(lambda)));
    }
    let (pick, sign): (fn(i64) -> bool, i64) = match kind {
        ComplexKind::C => (|x| x < 0, -1),
        ComplexKind::D => (|x| x > 0, 1),
    };
    let ws: Vec<Weight> = model
        .vclass
        .plus
        .iter()
        .filter(|b| pick(dot_int(lambda, b)))
        .cloned()
        .collect();
    let mut out = KClass::zero();
    for (s, c) in alternating_subset_sums(&ws, sign, model.rank()) {
        let nu: Weight = chi.iter().zip(&s).map(|(a, b)| a + b).collect();
        out.add_scaled(&ch_to_kclass(group, &nu), &c);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RpInvariant {
    #[serde(serialize_with = "crate::io::ser_rat")]
    pub r: Rat,
    pub p: usize,
}

fn check_span(model: &WindowModel, v: &RatVec) -> Result<()> {
    model.group().check_dim(v.len())?;
    if !model.zonotope.in_span(v) {
        return Err(Error::OutsideSpan(v.to_string()));
    }
    Ok(())
}

/// `max_u <u, v> / h(u)` over facet normals: the least `r` with `v` in `r * Sigma`.
pub fn r_of(model: &WindowModel, v: &RatVec) -> Result<Rat> {
    check_span(model, v)?;
    Ok(model
        .facets
        .iter()
        .map(|f| v.dot_int(&f.normal) / &f.support)
        .max()
        .unwrap_or_else(Rat::zero)
        .max(Rat::zero()))
}

/// `{ (a, r) : sum a_i b_i = v, -r <= a_i <= 0 }`, or with `r` fixed.
fn dilation_system(model: &WindowModel, v: &RatVec, r: Option<&Rat>) -> Result<HalfSpaceSystem> {
    let gens = &model.zonotope.generators;
    let d = gens.len();
    let dim = if r.is_some() { d } else { d + 1 };
    let mut sys = HalfSpaceSystem::new(dim);
    for k in 0..model.rank() {
        let mut a = RatVec::zeros(dim);
        for (i, g) in gens.iter().enumerate() {
            a.0[i] = rat(g[k]);
        }
        sys.push_eq(a, v.0[k].clone())?;
    }
    for i in 0..d {
        let mut up = RatVec::zeros(dim);
        up.0[i] = rat(1);
        sys.push(HalfSpace::closed(up, Rat::zero()))?;
        let mut lo = RatVec::zeros(dim);
        lo.0[i] = rat(-1);
        match r {
            Some(r) => sys.push(HalfSpace::closed(lo, r.clone()))?,
            None => {
                lo.0[d] = rat(-1);
                sys.push(HalfSpace::closed(lo, Rat::zero()))?;
            }
        }
    }
    if r.is_none() {
        let mut nonneg = RatVec::zeros(dim);
        nonneg.0[d] = rat(-1);
        sys.push(HalfSpace::closed(nonneg, Rat::zero()))?;
    }
    Ok(sys)
}

/// The dilation `r` by linear programming.
pub fn r_of_lp(model: &WindowModel, v: &RatVec) -> Result<Rat> {
    check_span(model, v)?;
    let sys = dilation_system(model, v, None)?;
    let mut obj = RatVec::zeros(sys.dim);
    obj.0[sys.dim - 1] = rat(1);
    match lp_optimize(&obj, &sys, Sense::Min)? {
        LpOutcome::Optimal(r, _) => Ok(r),
        other => Err(Error::internal(format!("dilation LP returned {other:?}"))),
    }
}

/// Number of coefficients forced to `-r` on every representation `v = sum a_i b_i`, `a_i in [-r, 0]`.
pub fn p_of(model: &WindowModel, v: &RatVec, r: &Rat) -> Result<usize> {
    check_span(model, v)?;
    if r.is_zero() {
        return Ok(0);
    }
    let sys = dilation_system(model, v, Some(r))?;
    let neg_r = -r.clone();
    let mut p = 0;
    for i in 0..sys.dim {
        let mut obj = RatVec::zeros(sys.dim);
        obj.0[i] = rat(1);
        match lp_optimize(&obj, &sys, Sense::Max)? {
            LpOutcome::Optimal(m, _) if m == neg_r => p += 1,
            LpOutcome::Optimal(..) => {}
            other => return Err(Error::internal(format!("p LP returned {other:?}"))),
        }
    }
    Ok(p)
}

/// `a_i` pinned to `-r` where `<lambda, b_i> > 0` and to `0` where `< 0` still admits a solution.
pub fn pinned_solution_exists(model: &WindowModel, v: &RatVec, r: &Rat, lambda: &[i64]) -> Result<bool> {
    let mut sys = dilation_system(model, v, Some(r))?;
    for (i, g) in model.zonotope.generators.iter().enumerate() {
        let s = dot_int(lambda, g);
        if s == 0 {
            continue;
        }
        let mut e = RatVec::zeros(sys.dim);
        e.0[i] = rat(1);
        let target = if s > 0 { -r.clone() } else { Rat::zero() };
        sys.push_eq(e, target)?;
    }
    let obj = RatVec::zeros(sys.dim);
    Ok(!matches!(lp_optimize(&obj, &sys, Sense::Min)?, LpOutcome::Infeasible))
}

pub fn rp_of(model: &WindowModel, v: &RatVec) -> Result<RpInvariant> {
    let r = r_of(model, v)?;
    let p = p_of(model, v, &r)?;
    Ok(RpInvariant { r, p })
}

/// Which tight facet to use when several are available.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    #[default]
    Smallest,
    Largest,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub lambda: Weight,
    #[serde(serialize_with = "crate::io::ser_rat")]
    pub r: Rat,
    #[serde(serialize_with = "crate::io::ser_rat")]
    pub pairing: Rat,
    pub kind: ComplexKind,
}

/// Anti-dominant `lambda` minimizing over `r * Sigma` at `v`, with the complex chosen by `<lambda, ell>`.
pub fn separating_lambda(model: &WindowModel, v: &RatVec, ell: &RatVec, tie: TieBreak) -> Result<Separation> {
    let r = r_of(model, v)?;
    if r.is_zero() {
        return Err(Error::AlreadyInWindow(v.to_string()));
    }
    let group = model.group();
    let tight: Vec<&Weight> = model
        .facets
        .iter()
        .filter(|f| group.is_dominant(&f.normal) && v.dot_int(&f.normal) == &r * &f.support)
        .map(|f| &f.normal)
        .collect();
    let u = match tie {
        TieBreak::Smallest => tight.first(),
        TieBreak::Largest => tight.last(),
    }
    .ok_or_else(|| Error::internal(format!("no dominant tight facet at {v}")))?;
    let lambda: Weight = u.iter().map(|x| -x).collect();
    if !group.is_antidominant(&lambda) {
        return Err(Error::internal("tight normal is not anti-dominant after negation"));
    }
    // <lambda, v> is the minimum of <lambda, .> over r * Sigma
    let min_on = -(&r * model.zonotope.support_int(u));
    if v.dot_int(&lambda) != min_on {
        return Err(Error::internal("separating lambda does not minimize"));
    }
    let pairing = ell.dot_int(&lambda);
    if pairing.is_zero() {
        return Err(Error::NotGeneric(format!("{ell} pairs to zero with {}", fmt_weight(&lambda))));
    }
    let kind = if pairing.is_negative() { ComplexKind::D } else { ComplexKind::C };
    Ok(Separation { lambda, r, pairing, kind })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub chi: Weight,
    pub rp: RpInvariant,
    pub separation: Separation,
    /// `[V(chi)]` equals this class in the target window's K-group.
    pub replacement: KClass,
}

/// The half-open target window at `delta0` oriented by `eps`, with stability `ell`.
pub struct TargetWindow<'a> {
    pub model: &'a WindowModel,
    pub delta_work: RatVec,
    pub ell: RatVec,
    pub basis: Vec<Weight>,
    pub tie: TieBreak,
    cache: RefCell<BTreeMap<Weight, RewriteStep>>,
    r_cache: RefCell<BTreeMap<Weight, Rat>>,
    p_cache: RefCell<BTreeMap<Weight, usize>>,
}

impl<'a> TargetWindow<'a> {
    pub fn new(model: &'a WindowModel, delta0: &RatVec, eps: &RatVec, ell: &RatVec) -> Result<Self> {
        let basis = model.window_weights(delta0, Some(eps))?;
        let delta_work = model.nudge(delta0, eps)?;
        if model.window_weights(&delta_work, None)? != basis {
            return Err(Error::internal("nudged window differs from the half-open window"));
        }
        Self::with_basis(model, delta_work, basis, ell)
    }

    /// Closed window at a point off the arrangement.
    pub fn at(model: &'a WindowModel, delta: &RatVec, ell: &RatVec) -> Result<Self> {
        let basis = model.window_weights(delta, None)?;
        Self::with_basis(model, delta.clone(), basis, ell)
    }

    fn with_basis(model: &'a WindowModel, delta_work: RatVec, basis: Vec<Weight>, ell: &RatVec) -> Result<Self> {
        model.group().check_dim(ell.len())?;
        if !model.zonotope.is_generic(ell)? {
            return Err(Error::NotGeneric(ell.to_string()));
        }
        Ok(TargetWindow {
            model,
            delta_work,
            ell: ell.clone(),
            basis,
            tie: TieBreak::default(),
            cache: RefCell::new(BTreeMap::new()),
            r_cache: RefCell::new(BTreeMap::new()),
            p_cache: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn with_tie(mut self, tie: TieBreak) -> Self {
        self.tie = tie;
        self.cache.borrow_mut().clear();
        self
    }

    pub fn contains(&self, chi: &[i64]) -> bool {
        self.basis.binary_search(&chi.to_vec()).is_ok()
    }

    /// `chi + rho - delta`.
    pub fn shifted(&self, chi: &[i64]) -> RatVec {
        &(&RatVec::from_ints(chi) + &self.model.rho) - &self.delta_work
    }

    pub fn r(&self, chi: &[i64]) -> Result<Rat> {
        if let Some(r) = self.r_cache.borrow().get(chi) {
            return Ok(r.clone());
        }
        let r = r_of(self.model, &self.shifted(chi))?;
        self.r_cache.borrow_mut().insert(chi.to_vec(), r.clone());
        Ok(r)
    }

    pub fn p(&self, chi: &[i64]) -> Result<usize> {
        if let Some(p) = self.p_cache.borrow().get(chi) {
            return Ok(*p);
        }
        let p = p_of(self.model, &self.shifted(chi), &self.r(chi)?)?;
        self.p_cache.borrow_mut().insert(chi.to_vec(), p);
        Ok(p)
    }

    pub fn rp(&self, chi: &[i64]) -> Result<RpInvariant> {
        Ok(RpInvariant { r: self.r(chi)?, p: self.p(chi)? })
    }

    /// `(r, p)` of `mu` is lexicographically below `rp`; `p` is computed only on ties.
    fn below(&self, mu: &[i64], rp: &RpInvariant) -> Result<bool> {
        let r = self.r(mu)?;
        if r != rp.r {
            return Ok(r < rp.r);
        }
        Ok(self.p(mu)? < rp.p)
    }

    /// One step of the rewriting algorithm for a dominant `chi` outside the window.
    pub fn rewrite_relation(&self, chi: &[i64]) -> Result<RewriteStep> {
        if let Some(s) = self.cache.borrow().get(chi) {
            return Ok(s.clone());
        }
        let group = self.model.group();
        group.check_dim(chi.len())?;
        if !group.is_dominant(chi) {
            return Err(Error::NotDominant(fmt_weight(chi)));
        }
        if self.contains(chi) {
            return Err(Error::AlreadyInWindow(fmt_weight(chi)));
        }
        let v = self.shifted(chi);
        let rp = self.rp(chi)?;
        if rp.r <= frac(1, 2) {
            return Err(Error::internal(format!("{} has r <= 1/2 but is not in the window", fmt_weight(chi))));
        }
        let separation = separating_lambda(self.model, &v, &self.ell, self.tie)?;
        let cls = border_complex_class(self.model, separation.kind, &separation.lambda, chi)?;
        let c = cls.coeff(chi);
        if !c.abs().is_one() {
            return Err(Error::internal(format!("coefficient {c} of {} in its own relation", fmt_weight(chi))));
        }
        let mut replacement = KClass::zero();
        for (mu, x) in &cls.terms {
            if mu.as_slice() == chi {
                continue;
            }
            if !self.below(mu, &rp)? {
                return Err(Error::internal(format!(
                    "measure did not decrease: {} -> {}",
                    fmt_weight(chi),
                    fmt_weight(mu)
                )));
            }
            replacement.add_term(mu.clone(), -(&c * x));
        }
        let step = RewriteStep { chi: chi.to_vec(), rp, separation, replacement };
        self.cache.borrow_mut().insert(chi.to_vec(), step.clone());
        Ok(step)
    }

    /// Rewrites until every term lies in the window, largest measure first.
    pub fn express(&self, cls: &KClass) -> Result<KClass> {
        let mut cur = cls.clone();
        for _ in 0..100_000 {
            let outside: Vec<Weight> = cur.terms.keys().filter(|w| !self.contains(w)).cloned().collect();
            if outside.is_empty() {
                return Ok(cur);
            }
            let rs = outside.iter().map(|w| self.r(w)).collect::<Result<Vec<_>>>()?;
            let top = rs.iter().max().expect("nonempty").clone();
            let mut best: Option<(usize, &Weight)> = None;
            for (w, r) in outside.iter().zip(&rs) {
                if *r != top {
                    continue;
                }
                let p = self.p(w)?;
                if best.is_none_or(|(bp, bw)| (p, w) > (bp, bw)) {
                    best = Some((p, w));
                }
            }
            let chi = best.expect("nonempty").1.clone();
            let k = cur.terms.remove(&chi).expect("present");
            let step = self.rewrite_relation(&chi)?;
            cur.add_scaled(&step.replacement, &k);
        }
        Err(Error::internal("rewriting did not terminate"))
    }

    /// Coordinates of `cls` over the window basis.
    pub fn coordinates(&self, cls: &KClass) -> Result<Vec<BigInt>> {
        let e = self.express(cls)?;
        Ok(self.basis.iter().map(|w| e.coeff(w)).collect())
    }
}

/// Integer change of basis between two window bases, indexed `[target][source]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallCrossMatrix {
    pub source: Vec<Weight>,
    pub target: Vec<Weight>,
    pub matrix: IntMatrix,
}

impl WallCrossMatrix {
    pub fn identity(basis: Vec<Weight>) -> Self {
        let n = basis.len();
        WallCrossMatrix { source: basis.clone(), target: basis, matrix: IntMatrix::identity(n) }
    }

    /// `self` after `first`.
    pub fn compose_after(&self, first: &WallCrossMatrix) -> Result<WallCrossMatrix> {
        if first.target != self.source {
            return Err(Error::internal("bases do not chain"));
        }
        Ok(WallCrossMatrix {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix)?,
        })
    }

    pub fn inverse(&self) -> Result<WallCrossMatrix> {
        Ok(WallCrossMatrix {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: self.matrix.inverse()?,
        })
    }

    /// The image of a source basis element as a class.
    pub fn column(&self, chi: &[i64]) -> Option<KClass> {
        let j = self.source.iter().position(|w| w.as_slice() == chi)?;
        let mut k = KClass::zero();
        for (i, row) in self.matrix.rows.iter().enumerate() {
            k.add_term(self.target[i].clone(), row[j].clone());
        }
        Some(k)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.matrix.is_identity()
    }
}

/// Crossing the wall through `delta0` in the direction `eps`.
pub fn wall_cross_at(model: &WindowModel, delta0: &RatVec, eps: &RatVec, ell: &RatVec) -> Result<WallCrossMatrix> {
    let source = model.window_weights(delta0, Some(&-eps))?;
    let tw = TargetWindow::new(model, delta0, eps, ell)?;
    let target = tw.basis.clone();
    let mut matrix = IntMatrix::zeros(target.len(), source.len());
    for (j, chi) in source.iter().enumerate() {
        let col = if tw.contains(chi) {
            KClass::single(chi.clone())
        } else {
            tw.express(&KClass::single(chi.clone()))?
        };
        for (w, c) in &col.terms {
            let i = target
                .binary_search(w)
                .map_err(|_| Error::internal("expression left the target window"))?;
            matrix.rows[i][j] = c.clone();
        }
    }
    Ok(WallCrossMatrix { source, target, matrix })
}

/// A direction along `dir` made generic for the zonotope, on the same side of `wall`.
pub fn orientation(model: &WindowModel, arr: &PeriodicArrangement, dir: &RatVec, wall: &AffineHyperplane) -> Result<RatVec> {
    let side = |e: &RatVec| -> Result<Rat> { Ok(arr.coords(e)?.dot_int(&wall.normal)) };
    let s0 = side(dir)?;
    if model.zonotope.is_generic(dir)? {
        return Ok(dir.clone());
    }
    let scale = dir.abs_max().max(rat(1));
    for k in 1..64 {
        let e = dir + &model.reference.scale(&(&scale / Rat::from_integer(BigInt::from(2).pow(k))));
        if model.zonotope.is_generic(&e)? && side(&e)?.is_positive() == s0.is_positive() {
            return Ok(e);
        }
    }
    Err(Error::internal("no generic orientation found"))
}

/// The wall-crossing matrix from the window at `delta` to the window at `delta_prime`.
pub fn wall_cross_matrix(
    model: &WindowModel,
    arr: &PeriodicArrangement,
    delta: &RatVec,
    delta_prime: &RatVec,
    ell: &RatVec,
) -> Result<WallCrossMatrix> {
    model.check_delta(delta)?;
    model.check_delta(delta_prime)?;
    let cr = arr.crossings(delta, delta_prime)?;
    let distinct: BTreeSet<_> = cr.iter().map(|c| c.wall.clone()).collect();
    match distinct.len() {
        0 => {
            let src = model.window_weights(delta, None)?;
            if model.window_weights(delta_prime, None)? != src {
                return Err(Error::internal("windows differ without a separating wall"));
            }
            if !model.zonotope.is_generic(ell)? {
                return Err(Error::NotGeneric(ell.to_string()));
            }
            Ok(WallCrossMatrix::identity(src))
        }
        1 => {
            let c = &cr[0];
            let delta0 = delta.lerp(delta_prime, &c.t);
            let eps = orientation(model, arr, &(delta_prime - delta), &c.wall)?;
            let m = wall_cross_at(model, &delta0, &eps, ell)?;
            if m.source != model.window_weights(delta, None)? || m.target != model.window_weights(delta_prime, None)? {
                return Err(Error::internal("half-open windows disagree with the endpoint windows"));
            }
            Ok(m)
        }
        n => Err(Error::MultipleWalls(n)),
    }
}

/// Tensoring by the invariant character `m`.
pub fn translation_matrix(model: &WindowModel, delta: &RatVec, m: &[i64]) -> Result<WallCrossMatrix> {
    let group = model.group();
    group.check_dim(m.len())?;
    let mv = RatVec::from_ints(m);
    if !group.is_invariant(&mv) {
        return Err(Error::NotInvariant(fmt_weight(m)));
    }
    let source = model.window_weights(delta, None)?;
    let target = model.window_weights(&(delta + &mv), None)?;
    if source.len() != target.len() {
        return Err(Error::Hypothesis(format!(
            "translation by {} changes the window size from {} to {}",
            fmt_weight(m),
            source.len(),
            target.len()
        )));
    }
    let mut matrix = IntMatrix::zeros(target.len(), source.len());
    for (j, chi) in source.iter().enumerate() {
        let img: Weight = chi.iter().zip(m).map(|(a, b)| a + b).collect();
        let i = target.binary_search(&img).map_err(|_| {
            Error::Hypothesis(format!("translate {} is missing from the target window", fmt_weight(&img)))
        })?;
        matrix.rows[i][j] = BigInt::one();
    }
    Ok(WallCrossMatrix { source, target, matrix })
}
