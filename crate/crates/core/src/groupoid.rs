//! The groupoid of the complexified Kähler moduli space, realized on K-theory.
//!
//! Vertices are invariant points off the periodic arrangement. `Cross` arrows carry a
//! stability label, `Translate` arrows tensor by an invariant character.

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arrangement::PeriodicArrangement;
use crate::error::{Error, Result};
use crate::exact::rat::{fmt_weight, frac, Rat, RatVec, Weight};
use crate::io::{to_ratvec, RatInput, RepFile};
use crate::ktheory::{translation_matrix, wall_cross_matrix, WallCrossMatrix};
use crate::windows::WindowModel;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arrow {
    Cross { from: RatVec, to: RatVec, ell: RatVec },
    Translate { from: RatVec, m: Weight },
    Inverse(Box<Arrow>),
}

impl Arrow {
    pub fn source(&self) -> RatVec {
        match self {
            Arrow::Cross { from, .. } | Arrow::Translate { from, .. } => from.clone(),
            Arrow::Inverse(a) => a.target(),
        }
    }

    pub fn target(&self) -> RatVec {
        match self {
            Arrow::Cross { to, .. } => to.clone(),
            Arrow::Translate { from, m } => from.add_int(m),
            Arrow::Inverse(a) => a.source(),
        }
    }

    pub fn inverse(self) -> Arrow {
        match self {
            Arrow::Inverse(a) => *a,
            a => Arrow::Inverse(Box::new(a)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidWord {
    pub start: RatVec,
    pub arrows: Vec<Arrow>,
}

impl GroupoidWord {
    pub fn empty(start: RatVec) -> Self {
        GroupoidWord { start, arrows: Vec::new() }
    }

    /// Appends a crossing from the current endpoint.
    pub fn cross(mut self, to: RatVec, ell: RatVec) -> Self {
        let from = self.end();
        self.arrows.push(Arrow::Cross { from, to, ell });
        self
    }

    pub fn translate(mut self, m: Weight) -> Self {
        let from = self.end();
        self.arrows.push(Arrow::Translate { from, m });
        self
    }

    pub fn then(mut self, other: GroupoidWord) -> Self {
        self.arrows.extend(other.arrows);
        self
    }

    pub fn end(&self) -> RatVec {
        self.arrows.last().map_or_else(|| self.start.clone(), Arrow::target)
    }
}

/// One arrow of a word file. `inverse` walks the arrow backwards from the current point.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ArrowFile {
    Cross {
        to: Vec<RatInput>,
        ell: Vec<RatInput>,
        #[serde(default)]
        inverse: bool,
    },
    Translate {
        m: Weight,
        #[serde(default)]
        inverse: bool,
    },
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct WordFile {
    pub start: Vec<RatInput>,
    pub arrows: Vec<ArrowFile>,
}

impl WordFile {
    pub fn word(&self) -> Result<GroupoidWord> {
        let start = to_ratvec(&self.start)?;
        let mut at = start.clone();
        let mut arrows = Vec::new();
        for a in &self.arrows {
            let arrow = match a {
                ArrowFile::Cross { to, ell, inverse: false } => {
                    Arrow::Cross { from: at.clone(), to: to_ratvec(to)?, ell: to_ratvec(ell)? }
                }
                ArrowFile::Cross { to, ell, inverse: true } => {
                    Arrow::Cross { from: to_ratvec(to)?, to: at.clone(), ell: to_ratvec(ell)? }.inverse()
                }
                ArrowFile::Translate { m, inverse: false } => Arrow::Translate { from: at.clone(), m: m.clone() },
                ArrowFile::Translate { m, inverse: true } => {
                    let back: Weight = m.iter().map(|x| -x).collect();
                    if back.len() != at.len() {
                        return Err(Error::Dimension { expected: at.len(), got: back.len() });
                    }
                    Arrow::Translate { from: at.add_int(&back), m: m.clone() }.inverse()
                }
            };
            if arrow.source().len() != at.len() || arrow.target().len() != at.len() {
                return Err(Error::Dimension { expected: at.len(), got: arrow.target().len() });
            }
            at = arrow.target();
            arrows.push(arrow);
        }
        Ok(GroupoidWord { start, arrows })
    }
}

type CrossKey = (RatVec, RatVec, RatVec);

pub struct Groupoid<'a> {
    pub model: &'a WindowModel,
    pub arrangement: PeriodicArrangement,
    cache: RefCell<BTreeMap<CrossKey, WallCrossMatrix>>,
}

impl<'a> Groupoid<'a> {
    pub fn new(model: &'a WindowModel) -> Result<Self> {
        Ok(Groupoid { model, arrangement: model.delta_arrangement()?, cache: RefCell::new(BTreeMap::new()) })
    }

    fn check_vertex(&self, d: &RatVec) -> Result<()> {
        self.model.check_delta(d)?;
        if let Some(w) = self.arrangement.wall_at(d)? {
            return Err(Error::OnWall { point: d.to_string(), wall: format!("wall {w}") });
        }
        Ok(())
    }

    /// Reasons an edge is invalid, or Ok.
    pub fn validate_edge(&self, a: &RatVec, b: &RatVec, ell: &RatVec) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        self.model.check_delta(ell)?;
        if !self.model.zonotope.is_generic(ell)? {
            return Err(Error::NotGeneric(ell.to_string()));
        }
        let y = self.arrangement.coords(ell)?;
        for c in self.arrangement.crossings(a, b)? {
            if y.dot_int(&c.wall.normal).is_zero() {
                return Err(Error::NotGeneric(format!("{ell} is parallel to {}", c.wall)));
            }
        }
        Ok(())
    }

    pub fn edge_valid(&self, a: &RatVec, b: &RatVec, ell: &RatVec) -> bool {
        self.validate_edge(a, b, ell).is_ok()
    }

    pub fn separation_distance(&self, a: &RatVec, b: &RatVec) -> Result<usize> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        self.arrangement.separation_distance(a, b)
    }

    /// Matrix of a crossing, subdivided into single-wall steps.
    pub fn cross_matrix(&self, a: &RatVec, b: &RatVec, ell: &RatVec) -> Result<WallCrossMatrix> {
        let key = (a.clone(), b.clone(), ell.clone());
        if let Some(m) = self.cache.borrow().get(&key) {
            return Ok(m.clone());
        }
        self.validate_edge(a, b, ell)?;
        let cr = self.arrangement.crossings(a, b)?;
        for w in cr.windows(2) {
            if w[0].t == w[1].t {
                return Err(Error::MultipleWalls(2));
            }
        }
        let mut pts = vec![a.clone()];
        for w in cr.windows(2) {
            let mid = (&w[0].t + &w[1].t) / Rat::from_integer(2.into());
            pts.push(a.lerp(b, &mid));
        }
        pts.push(b.clone());
        let mut acc = WallCrossMatrix::identity(self.model.window_weights(a, None)?);
        for p in pts.windows(2) {
            let step = wall_cross_matrix(self.model, &self.arrangement, &p[0], &p[1], ell)?;
            acc = step.compose_after(&acc)?;
        }
        self.cache.borrow_mut().insert(key, acc.clone());
        Ok(acc)
    }

    pub fn translate_matrix(&self, d: &RatVec, m: &[i64]) -> Result<WallCrossMatrix> {
        self.check_vertex(d)?;
        self.check_vertex(&d.add_int(m))?;
        translation_matrix(self.model, d, m)
    }

    pub fn arrow_matrix(&self, a: &Arrow) -> Result<WallCrossMatrix> {
        match a {
            Arrow::Cross { from, to, ell } => self.cross_matrix(from, to, ell),
            Arrow::Translate { from, m } => self.translate_matrix(from, m),
            Arrow::Inverse(inner) => self.arrow_matrix(inner)?.inverse(),
        }
    }

    /// The product of the arrow matrices, in path order.
    pub fn word_to_matrix(&self, word: &GroupoidWord) -> Result<WallCrossMatrix> {
        let bad = |step: usize, e: Error| Error::InvalidArrow { step, reason: e.to_string() };
        self.check_vertex(&word.start).map_err(|e| bad(0, e))?;
        let mut acc = WallCrossMatrix::identity(self.model.window_weights(&word.start, None)?);
        let mut at = word.start.clone();
        for (i, a) in word.arrows.iter().enumerate() {
            if a.source() != at {
                return Err(bad(i, Error::internal(format!("starts at {} but the path is at {at}", a.source()))));
            }
            let m = self.arrow_matrix(a).map_err(|e| bad(i, e))?;
            acc = m.compose_after(&acc).map_err(|e| bad(i, e))?;
            at = a.target();
        }
        Ok(acc)
    }

    /// A path from `a` to `c` through adjacent cells, each step labelled `+-ell0`
    /// with the orientation of `c - a` relative to the wall it crosses.
    pub fn positive_path(&self, a: &RatVec, c: &RatVec, ell0: &RatVec) -> Result<GroupoidWord> {
        let dir = c - a;
        let y0 = self.arrangement.coords(ell0)?;
        let yd = self.arrangement.coords(&dir)?;
        let cr = self.arrangement.crossings(a, c)?;
        let mut pts = vec![a.clone()];
        for w in cr.windows(2) {
            pts.push(a.lerp(c, &((&w[0].t + &w[1].t) / Rat::from_integer(2.into()))));
        }
        pts.push(c.clone());
        let mut word = GroupoidWord::empty(a.clone());
        if cr.is_empty() {
            return Ok(word.cross(c.clone(), ell0.clone()));
        }
        for (k, cx) in cr.iter().enumerate() {
            let same = y0.dot_int(&cx.wall.normal).is_positive() == yd.dot_int(&cx.wall.normal).is_positive();
            let label = if same { ell0.clone() } else { -ell0 };
            word = word.cross(pts[k + 1].clone(), label);
        }
        Ok(word)
    }
}

/// One relation family checked on a fixture.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub family: String,
    pub description: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub skipped: usize,
    pub passed: bool,
}

impl VerificationReport {
    pub fn family_passed(&self, family: &str) -> bool {
        let mut any = false;
        for c in self.checks.iter().filter(|c| c.family == family) {
            any = true;
            if !c.passed {
                return false;
            }
        }
        any
    }
}

pub const FAMILIES: [&str; 5] = ["identity", "composition", "label", "translation", "minimal-path"];

/// Vertices, labels and translations to test the relations on.
#[derive(Clone, Debug)]
pub struct CongruenceCase {
    pub vertices: Vec<RatVec>,
    pub labels: Vec<RatVec>,
    pub translations: Vec<Weight>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CongruenceFile {
    pub rep: RepFile,
    pub vertices: Vec<Vec<RatInput>>,
    pub labels: Vec<Vec<RatInput>>,
    #[serde(default)]
    pub translations: Vec<Weight>,
}

impl CongruenceFile {
    pub fn case(&self) -> Result<CongruenceCase> {
        Ok(CongruenceCase {
            vertices: self.vertices.iter().map(|v| to_ratvec(v)).collect::<Result<_>>()?,
            labels: self.labels.iter().map(|v| to_ratvec(v)).collect::<Result<_>>()?,
            translations: self.translations.clone(),
        })
    }
}

fn orientation_pattern(g: &Groupoid, a: &RatVec, b: &RatVec, ell: &RatVec) -> Result<Vec<bool>> {
    let y = g.arrangement.coords(ell)?;
    Ok(g.arrangement
        .crossings(a, b)?
        .iter()
        .map(|c| y.dot_int(&c.wall.normal).is_positive())
        .collect())
}

/// Checks the groupoid relations as exact matrix identities; failures are reported, not thrown.
pub fn verify_congruences(g: &Groupoid, case: &CongruenceCase) -> VerificationReport {
    let mut checks = Vec::new();
    let mut skipped = 0;
    let mut record = |family: &str, description: String, r: Result<bool>| {
        let (passed, detail) = match r {
            Ok(p) => (p, None),
            Err(e) => (false, Some(e.to_string())),
        };
        checks.push(CheckResult { family: family.into(), description, passed, detail });
    };
    let vs = &case.vertices;
    let eq = |x: Result<WallCrossMatrix>, y: Result<WallCrossMatrix>| -> Result<bool> { Ok(x? == y?) };

    for v in vs {
        for l in &case.labels {
            if !g.edge_valid(v, v, l) {
                skipped += 1;
                continue;
            }
            let m = g.cross_matrix(v, v, l);
            record("identity", format!("[{v}] -{l}-> [{v}]"), m.map(|m| m.is_identity()));
        }
    }

    for a in vs {
        for b in vs {
            for l in &case.labels {
                if !g.edge_valid(a, b, l) {
                    continue;
                }
                // the back-and-forth loop is a degenerate triple
                let back = g.cross_matrix(b, a, l).and_then(|x| x.compose_after(&g.cross_matrix(a, b, l)?));
                record("identity", format!("[{a}] -{l}-> [{b}] -{l}-> [{a}]"), back.map(|m| m.is_identity()));
                for c in vs {
                    if a == b || b == c || a == c || !g.edge_valid(b, c, l) || !g.edge_valid(a, c, l) {
                        continue;
                    }
                    let two = g.cross_matrix(b, c, l).and_then(|x| x.compose_after(&g.cross_matrix(a, b, l)?));
                    record("composition", format!("[{a}] -> [{b}] -> [{c}] with {l}"), eq(two, g.cross_matrix(a, c, l)));
                }
            }
        }
    }

    for a in vs {
        for b in vs {
            for (i, l) in case.labels.iter().enumerate() {
                for l2 in &case.labels[i + 1..] {
                    if !g.edge_valid(a, b, l) || !g.edge_valid(a, b, l2) {
                        continue;
                    }
                    let same = match (orientation_pattern(g, a, b, l), orientation_pattern(g, a, b, l2)) {
                        (Ok(x), Ok(y)) => x == y,
                        _ => false,
                    };
                    if !same {
                        continue;
                    }
                    record(
                        "label",
                        format!("[{a}] -> [{b}] with {l} and {l2}"),
                        eq(g.cross_matrix(a, b, l), g.cross_matrix(a, b, l2)),
                    );
                }
            }
        }
    }

    for m in &case.translations {
        for a in vs {
            for b in vs {
                for l in &case.labels {
                    let (am, bm) = (a.add_int(m), b.add_int(m));
                    if !g.edge_valid(a, b, l) || !g.edge_valid(&am, &bm, l) {
                        continue;
                    }
                    let lhs = g.translate_matrix(b, m).and_then(|t| t.compose_after(&g.cross_matrix(a, b, l)?));
                    let rhs = g.cross_matrix(&am, &bm, l).and_then(|x| x.compose_after(&g.translate_matrix(a, m)?));
                    record("translation", format!("cross [{a}] -> [{b}] commutes with {}", fmt_weight(m)), eq(lhs, rhs));
                }
            }
        }
        for m2 in &case.translations {
            for a in vs {
                let sum: Weight = m.iter().zip(m2).map(|(x, y)| x + y).collect();
                let two = g
                    .translate_matrix(&a.add_int(m), m2)
                    .and_then(|t| t.compose_after(&g.translate_matrix(a, m)?));
                record(
                    "translation",
                    format!("[{a}] by {} then {}", fmt_weight(m), fmt_weight(m2)),
                    eq(two, g.translate_matrix(a, &sum)),
                );
            }
        }
    }

    if let Some(ell0) = case.labels.first() {
        for a in vs {
            for c in vs {
                let Ok(d) = g.separation_distance(a, c) else { continue };
                if d == 0 {
                    continue;
                }
                let direct = g.positive_path(a, c, ell0).and_then(|w| g.word_to_matrix(&w));
                if g.edge_valid(a, c, &(c - a)) {
                    record(
                        "minimal-path",
                        format!("[{a}] -> [{c}] labelled by the displacement"),
                        eq(g.cross_matrix(a, c, &(c - a)), g.positive_path(a, c, ell0).and_then(|w| g.word_to_matrix(&w))),
                    );
                }
                for b in vs {
                    let (Ok(d1), Ok(d2)) = (g.separation_distance(a, b), g.separation_distance(b, c)) else { continue };
                    if b == a || b == c || d1 + d2 != d {
                        continue;
                    }
                    let via = g
                        .positive_path(a, b, ell0)
                        .and_then(|w| Ok(w.then(g.positive_path(b, c, ell0)?)))
                        .and_then(|w| g.word_to_matrix(&w));
                    record(
                        "minimal-path",
                        format!("[{a}] -> [{b}] -> [{c}] against the direct positive path"),
                        eq(via, direct.clone()),
                    );
                }
            }
        }
    }

    let passed = !checks.is_empty() && checks.iter().all(|c| c.passed);
    VerificationReport { checks, skipped, passed }
}

/// A generic midpoint helper for tests and examples: the cell centre between two reals.
pub fn midpoint(a: &RatVec, b: &RatVec) -> RatVec {
    a.lerp(b, &frac(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep_weights::WeightMultiset;
    use crate::root_datum::GroupDatum;

    fn hilbert1() -> WindowModel {
        let rep = WeightMultiset::new(GroupDatum::gl(1), vec![vec![0], vec![0], vec![1], vec![-1], vec![0]]).unwrap();
        WindowModel::new(&rep).unwrap()
    }

    fn p(n: i64, d: i64) -> RatVec {
        RatVec::from_fracs(&[(n, d)])
    }

    #[test]
    fn hilbert_edges() {
        let m = hilbert1();
        let g = Groupoid::new(&m).unwrap();
        assert!(g.edge_valid(&p(1, 5), &p(7, 10), &p(1, 1)));
        assert!(g.edge_valid(&p(1, 5), &p(1, 5), &p(1, 1)));
        assert!(!g.edge_valid(&p(1, 5), &p(7, 10), &p(0, 1)));
        assert!(!g.edge_valid(&p(1, 2), &p(7, 10), &p(1, 1)));
        assert_eq!(g.separation_distance(&p(1, 5), &p(23, 10)).unwrap(), 2);
        assert_eq!(g.separation_distance(&p(1, 5), &p(1, 5)).unwrap(), 0);
    }

    #[test]
    fn hilbert_words() {
        let m = hilbert1();
        let g = Groupoid::new(&m).unwrap();
        assert!(g.word_to_matrix(&GroupoidWord::empty(p(1, 5))).unwrap().is_identity());
        let w = GroupoidWord::empty(p(1, 5)).cross(p(7, 10), p(1, 1)).cross(p(1, 5), p(1, 1));
        assert!(g.word_to_matrix(&w).unwrap().is_identity());
        let bad = GroupoidWord { start: p(1, 5), arrows: vec![Arrow::Cross { from: p(7, 10), to: p(1, 5), ell: p(1, 1) }] };
        assert!(matches!(g.word_to_matrix(&bad), Err(Error::InvalidArrow { step: 0, .. })));
        let long = GroupoidWord::empty(p(1, 5)).cross(p(23, 10), p(1, 1));
        let m = g.word_to_matrix(&long).unwrap();
        assert_eq!(m.source, vec![vec![0]]);
        assert_eq!(m.target, vec![vec![2]]);
        let inv = GroupoidWord::empty(p(1, 5)).cross(p(23, 10), p(1, 1)).then(GroupoidWord {
            start: p(23, 10),
            arrows: vec![Arrow::Cross { from: p(1, 5), to: p(23, 10), ell: p(1, 1) }.inverse()],
        });
        assert!(g.word_to_matrix(&inv).unwrap().is_identity());
    }

    #[test]
    fn word_file() {
        let m = hilbert1();
        let g = Groupoid::new(&m).unwrap();
        let f: WordFile = serde_json::from_str(
            r#"{"start":["1/5"],"arrows":[{"kind":"cross","to":["7/10"],"ell":[1]},
                {"kind":"translate","m":[1]},{"kind":"translate","m":[1],"inverse":true},
                {"kind":"cross","to":["1/5"],"ell":[1],"inverse":true}]}"#,
        )
        .unwrap();
        let w = f.word().unwrap();
        assert_eq!(w.end(), p(1, 5));
        assert!(g.word_to_matrix(&w).unwrap().is_identity());
    }

    #[test]
    fn hilbert_congruences() {
        let m = hilbert1();
        let g = Groupoid::new(&m).unwrap();
        let case = CongruenceCase {
            vertices: vec![p(1, 5), p(7, 10), p(23, 10), p(-3, 10)],
            labels: vec![p(1, 1), p(2, 1), p(-1, 1)],
            translations: vec![vec![1], vec![-2]],
        };
        let r = verify_congruences(&g, &case);
        for f in FAMILIES {
            assert!(r.family_passed(f), "{f}: {:?}", r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
        }
    }
}
