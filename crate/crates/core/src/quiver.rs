//! Nakajima quiver data: framed double representations, the Q' construction that
//! trades the moment map for a torus, stability genericity, and Hilbert schemes of points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rat::{Rat, RatVec, Weight};
use crate::io::{read, to_ratvec, RatInput, RepSpec};
use crate::rep_weights::WeightMultiset;
use crate::root_datum::GroupDatum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverSpec {
    pub names: Vec<String>,
    /// Undirected edges; `(i, i)` is a loop.
    pub edges: Vec<(usize, usize)>,
    pub v: Vec<usize>,
    pub w: Vec<usize>,
    pub zeta: Option<RatVec>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum VertexInput {
    Count(usize),
    Names(Vec<String>),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub vertices: VertexInput,
    pub edges: Vec<(usize, usize)>,
    pub v: Vec<usize>,
    pub w: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<Vec<RatInput>>,
}

impl QuiverSpec {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, v: Vec<usize>, w: Vec<usize>) -> Result<Self> {
        let q = QuiverSpec { names: (0..n).map(|i| i.to_string()).collect(), edges, v, w, zeta: None };
        q.validate()?;
        Ok(q)
    }

    pub fn jordan(n: usize) -> Self {
        QuiverSpec { names: vec!["0".into()], edges: vec![(0, 0)], v: vec![n], w: vec![1], zeta: None }
    }

    pub fn with_zeta(mut self, zeta: RatVec) -> Result<Self> {
        if zeta.len() != self.names.len() {
            return Err(Error::Dimension { expected: self.names.len(), got: zeta.len() });
        }
        self.zeta = Some(zeta);
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        let n = self.names.len();
        if self.v.len() != n || self.w.len() != n {
            return Err(Error::parse(format!("{n} vertices but |v| = {} and |w| = {}", self.v.len(), self.w.len())));
        }
        if let Some(&(a, b)) = self.edges.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::parse(format!("edge ({a}, {b}) names a missing vertex")));
        }
        if self.v.iter().all(|&x| x == 0) {
            return Err(Error::parse("dimension vector v is zero"));
        }
        if let Some(z) = &self.zeta {
            if z.len() != n {
                return Err(Error::parse(format!("zeta has {} entries for {n} vertices", z.len())));
            }
        }
        Ok(())
    }

    pub fn from_file(f: QuiverFile) -> Result<Self> {
        let names = match f.vertices {
            VertexInput::Count(n) => (0..n).map(|i| i.to_string()).collect(),
            VertexInput::Names(v) => v,
        };
        let zeta = f.zeta.as_deref().map(to_ratvec).transpose()?;
        let q = QuiverSpec { names, edges: f.edges, v: f.v, w: f.w, zeta };
        q.validate()?;
        Ok(q)
    }

    pub fn to_file(&self) -> QuiverFile {
        QuiverFile {
            vertices: VertexInput::Names(self.names.clone()),
            edges: self.edges.clone(),
            v: self.v.clone(),
            w: self.w.clone(),
            zeta: self.zeta.as_ref().map(crate::io::ratvec_input),
        }
    }

    pub fn parse(json: &str) -> Result<Self> {
        Self::from_file(crate::io::parse_json(json)?)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::parse(&read(path)?)
    }

    /// `GL(v_i)` for every vertex with `v_i > 0`, in vertex order.
    pub fn group(&self) -> GroupDatum {
        let f: Vec<usize> = self.v.iter().copied().filter(|&x| x > 0).collect();
        GroupDatum::new(f, 0).expect("v is nonzero")
    }

    /// Start of each vertex's coordinate block.
    fn offsets(&self) -> Vec<usize> {
        let mut o = Vec::with_capacity(self.v.len());
        let mut at = 0;
        for &x in &self.v {
            o.push(at);
            at += x;
        }
        o
    }

    fn unit(&self, i: usize, a: usize) -> Weight {
        let mut e = vec![0; self.v.iter().sum()];
        e[self.offsets()[i] + a] = 1;
        e
    }

    /// Weights of `E(V,V) + L(W,V) + L(V,W)` for the diagonal torus.
    pub fn double_weights(&self) -> Vec<Weight> {
        let mut out = Vec::new();
        for &(i, j) in &self.edges {
            for (s, t) in [(i, j), (j, i)] {
                for a in 0..self.v[s] {
                    for b in 0..self.v[t] {
                        let e: Weight = self.unit(s, a).iter().zip(self.unit(t, b)).map(|(x, y)| x - y).collect();
                        out.push(e);
                    }
                }
            }
        }
        for i in 0..self.v.len() {
            for a in 0..self.v[i] {
                let e = self.unit(i, a);
                for _ in 0..self.w[i] {
                    out.push(e.clone());
                    out.push(e.iter().map(|x| -x).collect());
                }
            }
        }
        out
    }

    /// Stability parameter for `Q'`: `zeta'_{i(a)} = zeta_i`.
    pub fn q_prime_zeta(&self) -> Option<RatVec> {
        self.zeta.as_ref().map(|z| {
            RatVec(self.v.iter().enumerate().flat_map(|(i, &n)| std::iter::repeat_n(z.0[i].clone(), n)).collect())
        })
    }
}

/// The framed double quiver representation, with the adjoint adjoined to stand in for the moment map.
pub fn nakajima_weights(q: &QuiverSpec) -> Result<RepSpec> {
    q.validate()?;
    let mut spec = RepSpec::new(q.group(), q.double_weights(), true)?;
    spec.name = Some(format!("quiver v={:?} w={:?}", q.v, q.w));
    Ok(spec)
}

/// Splits every vertex into `v_i` one-dimensional vertices and adds a loop at each
/// original vertex, so that the double of `Q'` carries the weights of `Q` plus `g + g^vee`.
pub fn q_prime(q: &QuiverSpec) -> Result<QuiverSpec> {
    q.validate()?;
    let offs = q.offsets();
    let mut names = Vec::new();
    for (i, &n) in q.v.iter().enumerate() {
        for a in 0..n {
            names.push(format!("{}({})", q.names[i], a + 1));
        }
    }
    let loops = (0..q.v.len()).map(|i| (i, i));
    let mut edges = Vec::new();
    for (i, j) in q.edges.iter().copied().chain(loops) {
        for a in 0..q.v[i] {
            for b in 0..q.v[j] {
                // a loop's ordered pairs (a, b) and (b, a) give two edges between distinct copies
                edges.push((offs[i] + a, offs[j] + b));
            }
        }
    }
    let total: usize = q.v.iter().sum();
    let w = q.v.iter().zip(&q.w).flat_map(|(&n, &wi)| std::iter::repeat_n(wi, n)).collect();
    Ok(QuiverSpec { names, edges, v: vec![1; total], w, zeta: q.q_prime_zeta() })
}

/// The multiset `M_Q + g + g^vee` as diagonal-torus weights, sorted.
pub fn q_prime_oracle(q: &QuiverSpec) -> Vec<Weight> {
    let g = q.group();
    let mut out = q.double_weights();
    let adj = WeightMultiset { group: g.clone(), weights: Vec::new() }.adjoin_adjoint().weights;
    out.extend(adj.iter().cloned());
    out.extend(adj.iter().map(|w| w.iter().map(|x| -x).collect()));
    out.sort();
    out
}

/// `theta . zeta != 0` for every nonzero `theta` with `0 <= theta_i <= v_i`.
pub fn stability_generic(zeta: &RatVec, v: &[usize]) -> Result<bool> {
    if zeta.len() != v.len() {
        return Err(Error::Dimension { expected: v.len(), got: zeta.len() });
    }
    let mut theta = vec![0usize; v.len()];
    loop {
        let mut k = 0;
        while k < v.len() && theta[k] == v[k] {
            theta[k] = 0;
            k += 1;
        }
        if k == v.len() {
            return Ok(true);
        }
        theta[k] += 1;
        let s: Rat = theta.iter().zip(&zeta.0).map(|(&t, z)| z * Rat::from_integer(t.into())).sum();
        if s == Rat::from_integer(0.into()) {
            return Ok(false);
        }
    }
}

/// `Hilb^n(C^2)`: the Jordan quiver with `v = n`, `w = 1`.
pub fn hilbert_example(n: usize) -> Result<RepSpec> {
    if n < 1 {
        return Err(Error::parse("hilbert example needs n >= 1"));
    }
    let mut spec = nakajima_weights(&QuiverSpec::jordan(n))?;
    spec.name = Some(format!("Hilb^{n}(C^2)"));
    Ok(spec)
}
