//! Serializable reports behind the `magicwin` subcommands. Every rational is a `"p/q"` string.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::arrangement::PeriodicArrangement;
use crate::error::{Error, Result};
use crate::exact::rat::{fmt_weight, Rat, RatVec, Weight};
use crate::groupoid::{verify_congruences, CongruenceFile, Groupoid, VerificationReport, FAMILIES};
use crate::io::{RepFile, RepSpec};
use crate::ktheory::WallCrossMatrix;
use crate::quiver::{nakajima_weights, q_prime, q_prime_oracle, stability_generic, QuiverFile, QuiverSpec};
use crate::windows::WindowModel;
use crate::zonotope::{FacetData, Zonotope};

pub const NOTE_WEIGHTS: &str = "input weights are the weights of X; the zonotope is built from X^vee";
pub const NOTE_NABLA: &str = "nabla convention: walls <u, delta> in Z + eta_u/2 over the facet normals u";
pub const NOTE_SIGMA_X: &str =
    "Sigma(X) convention: walls <u, delta> in Z + h(u), h the support function of Sigma(X) for X without the adjoint";
pub const NOTE_THETA: &str = "stability genericity ranges over theta with 0 <= theta_i <= v_i, theta != 0";
pub const NOTE_MATRIX: &str = "matrices are indexed [target][source]; column j expresses source basis element j";

/// The envelope printed by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub input_digest: String,
    pub result: serde_json::Value,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new<T: Serialize>(command: Vec<String>, inputs: &[&[u8]], result: &T, notes: Vec<String>) -> Result<Self> {
        let result = serde_json::to_value(result).map_err(|e| Error::internal(e.to_string()))?;
        Ok(Report { command, input_digest: digest(inputs), result, notes })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// SHA-256 over the inputs, each prefixed by its length.
pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for i in inputs {
        h.update((i.len() as u64).to_le_bytes());
        h.update(i);
    }
    format!("sha256:{:x}", h.finalize())
}

fn model(spec: &RepSpec) -> Result<WindowModel> {
    WindowModel::new(&spec.full())
}

#[derive(Clone, Debug, Serialize)]
pub struct LineSum {
    pub line: Weight,
    pub sum: Weight,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: Option<String>,
    pub gl_factors: Vec<usize>,
    pub torus_rank: usize,
    pub weight_count: usize,
    pub adjoint_adjoined: bool,
    pub quasi_symmetric: bool,
    pub unbalanced_lines: Vec<LineSum>,
    pub spans: bool,
    #[serde(serialize_with = "crate::io::ser_opt_ratvec")]
    pub generic_invariant_point: Option<RatVec>,
    pub ell_generic: Option<bool>,
    pub delta_boundary_free: Option<bool>,
    pub ok: bool,
}

pub fn check(spec: &RepSpec) -> Result<CheckReport> {
    let full = spec.full();
    let z = Zonotope::of_rep(&full);
    let unbalanced: Vec<LineSum> = full.unbalanced_lines().into_iter().map(|(line, sum)| LineSum { line, sum }).collect();
    let spans = z.spans_ambient();
    let generic = if spans { z.sample_generic_in_invariants(&spec.group)? } else { None };
    let ell_generic = match &spec.ell {
        Some(l) => Some(z.is_generic(l)?),
        None => None,
    };
    let quasi = unbalanced.is_empty();
    let delta_boundary_free = match (&spec.delta, quasi && spans && generic.is_some()) {
        (Some(d), true) => Some(model(spec)?.boundary_free(d)?),
        _ => None,
    };
    let ok = quasi && spans && generic.is_some() && ell_generic != Some(false);
    Ok(CheckReport {
        name: spec.name.clone(),
        gl_factors: spec.group.gl_factors.clone(),
        torus_rank: spec.group.torus_rank,
        weight_count: full.weights.len(),
        adjoint_adjoined: spec.adjoint,
        quasi_symmetric: quasi,
        unbalanced_lines: unbalanced,
        spans,
        generic_invariant_point: generic,
        ell_generic,
        delta_boundary_free,
        ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NablaFacet {
    pub normal: Weight,
    #[serde(serialize_with = "crate::io::ser_rat")]
    pub bound: Rat,
}

#[derive(Clone, Debug, Serialize)]
pub struct FacetsReport {
    /// Facets of the zonotope the windows are built from.
    pub facets: Vec<FacetData>,
    /// For inputs with the adjoint adjoined: facets of `Sigma(X)` alone.
    pub sigma_x_facets: Option<Vec<FacetData>>,
    /// Half-spaces `<u, chi> <= eta_u / 2`.
    pub nabla: Vec<NablaFacet>,
}

pub fn facets(spec: &RepSpec) -> Result<FacetsReport> {
    let m = model(spec)?;
    let sigma_x = if spec.adjoint { Some(Zonotope::of_rep(&spec.base()).facets()?) } else { None };
    let nabla = m
        .facets
        .iter()
        .map(|f| NablaFacet { normal: f.normal.clone(), bound: &m.eta[&f.normal] / Rat::from_integer(2.into()) })
        .collect();
    Ok(FacetsReport { facets: m.facets.clone(), sigma_x_facets: sigma_x, nabla })
}

#[derive(Clone, Debug, Serialize)]
pub struct WindowReport {
    #[serde(serialize_with = "crate::io::ser_ratvec")]
    pub delta: RatVec,
    #[serde(serialize_with = "crate::io::ser_opt_ratvec")]
    pub eps: Option<RatVec>,
    pub boundary_free: bool,
    pub size: usize,
    pub window: Vec<Weight>,
}

pub fn window(spec: &RepSpec, delta: &RatVec, eps: Option<&RatVec>) -> Result<WindowReport> {
    let m = model(spec)?;
    let boundary_free = m.boundary_free(delta)?;
    let w = m.window_weights(delta, eps)?;
    Ok(WindowReport { delta: delta.clone(), eps: eps.cloned(), boundary_free, size: w.len(), window: w })
}

#[derive(Clone, Debug, Serialize)]
pub struct WallHit {
    pub wall: String,
    pub normal: Weight,
    #[serde(serialize_with = "crate::io::ser_rat")]
    pub offset: Rat,
    #[serde(serialize_with = "crate::io::ser_rat")]
    pub t: Rat,
}

#[derive(Clone, Debug, Serialize)]
pub struct WallSet {
    pub convention: String,
    pub crossings: Vec<WallHit>,
    pub separation_distance: usize,
    /// Wall positions in one period of a one-dimensional invariant line.
    pub per_period: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WallsReport {
    #[serde(serialize_with = "crate::io::ser_ratvec")]
    pub from: RatVec,
    #[serde(serialize_with = "crate::io::ser_ratvec")]
    pub to: RatVec,
    pub nabla: WallSet,
    pub sigma_x: Option<WallSet>,
    pub conventions_differ: Option<bool>,
}

fn wall_set(arr: &PeriodicArrangement, convention: &str, a: &RatVec, b: &RatVec) -> Result<WallSet> {
    let crossings = arr
        .crossings(a, b)?
        .into_iter()
        .map(|c| WallHit { wall: c.wall.to_string(), normal: c.wall.normal.clone(), offset: c.wall.offset.clone(), t: c.t })
        .collect();
    let per_period = if arr.group.invariant_subspace_basis().len() == 1 {
        Some(arr.walls_in_unit_period()?.iter().map(Rat::to_string).collect())
    } else {
        None
    };
    Ok(WallSet { convention: convention.into(), crossings, separation_distance: arr.separation_distance(a, b)?, per_period })
}

pub fn sigma_x_arrangement(spec: &RepSpec) -> Result<PeriodicArrangement> {
    PeriodicArrangement::from_zonotope_supports(spec.group.clone(), &Zonotope::of_rep(&spec.base()))
}

pub fn walls(spec: &RepSpec, from: &RatVec, to: &RatVec) -> Result<WallsReport> {
    let m = model(spec)?;
    let nabla = wall_set(&m.delta_arrangement()?, "nabla", from, to)?;
    let sigma_x = if spec.adjoint { Some(wall_set(&sigma_x_arrangement(spec)?, "sigma_x", from, to)?) } else { None };
    let differ = sigma_x.as_ref().map(|s| {
        let key = |w: &WallSet| w.crossings.iter().map(|c| c.wall.clone()).collect::<Vec<_>>();
        key(s) != key(&nabla) || s.per_period != nabla.per_period
    });
    Ok(WallsReport { from: from.clone(), to: to.clone(), nabla, sigma_x, conventions_differ: differ })
}

#[derive(Clone, Debug, Serialize)]
pub struct Column {
    pub source: Weight,
    pub image: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixReport {
    pub source: Vec<Weight>,
    pub target: Vec<Weight>,
    pub matrix: Vec<Vec<String>>,
    pub columns: Vec<Column>,
    pub unimodular: bool,
    pub identity: bool,
}

impl From<&WallCrossMatrix> for MatrixReport {
    fn from(m: &WallCrossMatrix) -> Self {
        let columns = m
            .source
            .iter()
            .map(|w| Column { source: w.clone(), image: m.column(w).map_or_else(String::new, |k| k.to_string()) })
            .collect();
        MatrixReport {
            source: m.source.clone(),
            target: m.target.clone(),
            matrix: m.matrix.to_strings(),
            columns,
            unimodular: m.matrix.is_unimodular(),
            identity: m.is_identity(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossReport {
    #[serde(serialize_with = "crate::io::ser_ratvec")]
    pub delta: RatVec,
    #[serde(serialize_with = "crate::io::ser_ratvec")]
    pub delta_prime: RatVec,
    #[serde(serialize_with = "crate::io::ser_ratvec")]
    pub ell: RatVec,
    pub walls_crossed: usize,
    pub result: MatrixReport,
}

pub fn cross(spec: &RepSpec, delta: &RatVec, delta_prime: &RatVec, ell: &RatVec) -> Result<CrossReport> {
    let m = model(spec)?;
    let g = Groupoid::new(&m)?;
    let mat = g.cross_matrix(delta, delta_prime, ell)?;
    Ok(CrossReport {
        delta: delta.clone(),
        delta_prime: delta_prime.clone(),
        ell: ell.clone(),
        walls_crossed: g.separation_distance(delta, delta_prime)?,
        result: (&mat).into(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct WordReport {
    #[serde(serialize_with = "crate::io::ser_ratvec")]
    pub start: RatVec,
    #[serde(serialize_with = "crate::io::ser_ratvec")]
    pub end: RatVec,
    pub arrows: usize,
    pub result: MatrixReport,
}

pub fn word(spec: &RepSpec, w: &crate::groupoid::WordFile) -> Result<WordReport> {
    let m = model(spec)?;
    let g = Groupoid::new(&m)?;
    let word = w.word()?;
    let mat = g.word_to_matrix(&word)?;
    Ok(WordReport { start: word.start.clone(), end: word.end(), arrows: word.arrows.len(), result: (&mat).into() })
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilySummary {
    pub family: String,
    pub checks: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub families: Vec<FamilySummary>,
    pub report: VerificationReport,
}

pub fn verify(f: &CongruenceFile) -> Result<VerifyReport> {
    let spec = RepSpec::from_file(f.rep.clone())?;
    let m = model(&spec)?;
    let g = Groupoid::new(&m)?;
    let report = verify_congruences(&g, &f.case()?);
    let families = FAMILIES
        .iter()
        .map(|fam| FamilySummary {
            family: fam.to_string(),
            checks: report.checks.iter().filter(|c| c.family == *fam).count(),
            passed: report.family_passed(fam),
        })
        .collect();
    Ok(VerifyReport { families, report })
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaReport {
    #[serde(serialize_with = "crate::io::ser_ratvec")]
    pub zeta: RatVec,
    pub generic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QPrimeReport {
    pub quiver: QuiverFile,
    /// `M_Q' = M_Q + g + g^vee` as multisets of torus weights.
    pub multiset_identity: bool,
    pub zeta: Option<ZetaReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuiverReport {
    pub rep: RepFile,
    pub check: CheckReport,
    pub zeta: Option<ZetaReport>,
    pub qprime: Option<QPrimeReport>,
}

pub fn quiver(q: &QuiverSpec, with_qprime: bool) -> Result<QuiverReport> {
    let spec = nakajima_weights(q)?;
    let zeta = match &q.zeta {
        Some(z) => Some(ZetaReport { zeta: z.clone(), generic: stability_generic(z, &q.v)? }),
        None => None,
    };
    let qprime = if with_qprime {
        let p = q_prime(q)?;
        let mut got = p.double_weights();
        got.sort();
        let zeta = match &p.zeta {
            Some(z) => Some(ZetaReport { zeta: z.clone(), generic: stability_generic(z, &p.v)? }),
            None => None,
        };
        Some(QPrimeReport { quiver: p.to_file(), multiset_identity: got == q_prime_oracle(q), zeta })
    } else {
        None
    };
    Ok(QuiverReport { rep: spec.to_file(), check: check(&spec)?, zeta, qprime })
}

#[derive(Clone, Debug, Serialize)]
pub struct PeriodWalls {
    pub convention: String,
    pub per_period: Vec<String>,
    /// `k` such that every `q` with `q^k = 1` lies on a wall.
    pub root_orders: Vec<u64>,
    /// True when the walls are exactly the union of those roots of unity.
    pub exactly_roots_of_unity: bool,
    pub description: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertWalls {
    pub sigma_x: PeriodWalls,
    pub nabla: PeriodWalls,
    pub conventions_differ: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertReport {
    pub n: usize,
    pub rep: RepFile,
    pub walls: Option<HilbertWalls>,
}

/// Reads a set of wall positions in `[0, 1)` as conditions on `q = exp(2 pi i (delta + i ell))`.
pub fn period_walls(convention: &str, walls: &[Rat]) -> PeriodWalls {
    use num_traits::ToPrimitive;
    let max_den = walls.iter().filter_map(|w| w.denom().to_u64()).max().unwrap_or(0);
    let has = |a: u64, b: u64| walls.contains(&Rat::new(a.into(), b.into()));
    let orders: Vec<u64> = (1..=max_den).filter(|&k| (0..k).all(|a| has(a, k))).collect();
    let exact = walls.iter().all(|w| w.denom().to_u64().is_some_and(|d| orders.iter().any(|k| k % d == 0)));
    let description = if walls.is_empty() {
        "no walls on the invariant line".to_string()
    } else if exact {
        let ks: Vec<String> = orders.iter().map(|k| format!("q^{k} != 1")).collect();
        ks.join(", ")
    } else {
        let qs: Vec<String> = walls.iter().map(|w| format!("q != exp(2 pi i {w})")).collect();
        qs.join(", ")
    };
    PeriodWalls {
        convention: convention.into(),
        per_period: walls.iter().map(Rat::to_string).collect(),
        root_orders: orders,
        exactly_roots_of_unity: exact,
        description,
    }
}

pub fn hilbert(n: usize, with_walls: bool) -> Result<HilbertReport> {
    let spec = crate::quiver::hilbert_example(n)?;
    let walls = if with_walls {
        let s = sigma_x_arrangement(&spec)?.walls_in_unit_period()?;
        let w = model(&spec)?.delta_arrangement()?.walls_in_unit_period()?;
        Some(HilbertWalls {
            conventions_differ: s != w,
            sigma_x: period_walls("sigma_x", &s),
            nabla: period_walls("nabla", &w),
        })
    } else {
        None
    };
    Ok(HilbertReport { n, rep: spec.to_file(), walls })
}

/// Rationals `a/b` in `[0, 1)` with `1 <= b <= n`, sorted.
pub fn farey_walls(n: u64) -> Vec<Rat> {
    let mut v: Vec<Rat> = (1..=n).flat_map(|b| (0..b).map(move |a| Rat::new(a.into(), b.into()))).collect();
    v.sort();
    v.dedup();
    v
}

pub fn weight_list(ws: &[Weight]) -> String {
    ws.iter().map(|w| fmt_weight(w)).collect::<Vec<_>>().join(" ")
}
