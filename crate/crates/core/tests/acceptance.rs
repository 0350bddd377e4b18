//! Acceptance suite: one line per criterion, exact comparisons only.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use magic_windows::exact::{frac, Rat, RatVec, Weight};
use magic_windows::groupoid::{CongruenceFile, Groupoid};
use magic_windows::io::parse_json;
use magic_windows::ktheory::{
    r_of, r_of_lp, rp_of, separating_lambda, wall_cross_at, ComplexKind, KClass, TargetWindow, TieBreak,
};
use magic_windows::quiver::{hilbert_example, q_prime, q_prime_oracle, stability_generic, QuiverSpec};
use magic_windows::rep_weights::{VirtualClass, WeightMultiset};
use magic_windows::report::{self, farey_walls};
use magic_windows::root_datum::GroupDatum;
use magic_windows::windows::WindowModel;
use magic_windows::zonotope::{combinations, FacetData};
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Duration, limit: u64) -> Result<(), String> {
    ensure(t <= Duration::from_secs(limit), || format!("took {:.2?}, limit {limit} s", t))
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    std::fs::read_to_string(p).expect("fixture present")
}

fn tsym3() -> WindowModel {
    let rep = WeightMultiset::new(GroupDatum::gl(2), vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]])
        .unwrap()
        .symplectic_double();
    WindowModel::new(&rep).unwrap()
}

fn hilbert_facets_expected(n: usize) -> Vec<FacetData> {
    let mut out = Vec::new();
    for k in 1..=n {
        for s in combinations(n, k) {
            let c = k + 2 * k * (n - k);
            for sign in [1i64, -1] {
                let mut u = vec![0; n];
                for &i in &s {
                    u[i] = sign;
                }
                out.push(FacetData { normal: u, support: Rat::from_integer(c.into()) });
            }
        }
    }
    out.sort();
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut last = Duration::ZERO;
    for n in 1..=4 {
        let t = Instant::now();
        let spec = hilbert_example(n).map_err(|e| e.to_string())?;
        let mut got = report::facets(&spec).map_err(|e| e.to_string())?.sigma_x_facets.ok_or("no Sigma(X) facets")?;
        got.sort();
        let want = hilbert_facets_expected(n);
        ensure(got == want, || format!("n={n}: got {got:?}"))?;
        last = t.elapsed();
    }
    within(last, 10)?;
    Ok(format!("n=1..4 facets match c_S (n=4 in {:.2?}, total {:.2?})", last, start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut differ = Vec::new();
    for n in 1..=3 {
        let r = report::hilbert(n, true).map_err(|e| e.to_string())?;
        let w = r.walls.ok_or("no walls")?;
        let want: Vec<String> = farey_walls(n as u64).iter().map(|x| x.to_string()).collect();
        ensure(w.sigma_x.per_period == want, || format!("n={n}: Sigma(X) walls {:?}", w.sigma_x.per_period))?;
        ensure(w.sigma_x.root_orders == (1..=n as u64).collect::<Vec<_>>(), || format!("n={n}: orders"))?;
        ensure(!w.nabla.per_period.is_empty(), || format!("n={n}: nabla set missing"))?;
        ensure(w.conventions_differ == (w.nabla.per_period != w.sigma_x.per_period), || format!("n={n}: flag"))?;
        differ.push(format!("n={n} nabla {:?} differs={}", w.nabla.per_period, w.conventions_differ));
    }
    within(start.elapsed(), 5)?;
    Ok(format!("Sigma(X) walls {{a/b : b <= n}} for n=1..3; {}", differ.join("; ")))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let g = tsym3();
    let d0 = RatVec(vec![frac(1, 2), frac(1, 2)]);
    let eps = RatVec(vec![frac(1, 4), frac(1, 4)]);
    let ell = RatVec::from_ints(&[1, 1]);
    let m = wall_cross_at(&g, &d0, &eps, &ell).map_err(|e| e.to_string())?;
    let expected: [(&[i64], KClass); 3] = [
        (&[-2, -2], KClass::from_terms(&[(&[2, 0], 1), (&[2, 2], -1)])),
        (&[-1, -2], KClass::from_terms(&[(&[1, -1], 1)])),
        (
            &[0, -2],
            KClass::from_terms(&[
                (&[-1, -1], 1),
                (&[2, 2], 1),
                (&[1, 0], 2),
                (&[0, 0], 1),
                (&[3, 1], -1),
                (&[3, 3], 1),
            ]),
        ),
    ];
    let mut bad = Vec::new();
    for (chi, want) in &expected {
        let got = m.column(chi).ok_or_else(|| format!("{chi:?} not in the source window"))?;
        if &got != want {
            bad.push(format!("Phi(V{chi:?}) = {got}, expected {want}"));
        }
    }
    let target: BTreeSet<&Weight> = m.target.iter().collect();
    for w in m.source.iter().filter(|w| target.contains(w)) {
        if m.column(w) != Some(KClass::single(w.clone())) {
            bad.push(format!("interior weight {w:?} not fixed"));
        }
    }
    within(start.elapsed(), 30)?;
    if bad.is_empty() {
        Ok("matches the expected values".into())
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let g = tsym3();
    let ell = RatVec::from_ints(&[1, 1]);
    let cases = [([4, -1], frac(3, 4), vec![-2, 1], ComplexKind::D), ([-1, -4], frac(2, 3), vec![0, 1], ComplexKind::C)];
    for (v, r, lam, kind) in cases {
        let v = RatVec::from_ints(&v);
        let got_r = r_of(&g, &v).map_err(|e| e.to_string())?;
        ensure(got_r == r, || format!("r({v}) = {got_r}"))?;
        let s = separating_lambda(&g, &v, &ell, TieBreak::Smallest).map_err(|e| e.to_string())?;
        ensure(s.lambda == lam && s.kind == kind, || format!("{v}: lambda {:?} kind {:?}", s.lambda, s.kind))?;
        let neg = s.pairing < Rat::from_integer(0.into());
        ensure(neg == (kind == ComplexKind::D), || format!("{v}: pairing {}", s.pairing))?;
    }
    within(start.elapsed(), 1)?;
    Ok(format!("r = 3/4 via D at (-2,1), r = 2/3 via C at (0,1) in {:.2?}", start.elapsed()))
}

const FIXTURES: usize = 60;

fn property_checks(rep: &WeightMultiset, seed: u64) -> Result<(), String> {
    let e = |x: magic_windows::Error| x.to_string();
    let mut r = common::rng(seed);
    let g = rep.group.clone();
    let m = WindowModel::new(rep).map_err(e)?;
    let vc = VirtualClass::of_rep(rep);

    // (a) eta symmetric and W-invariant
    for _ in 0..5 {
        let lam = common::random_int(&mut r, g.rank(), 3);
        let eta = vc.eta(&lam);
        let neg: Weight = lam.iter().map(|x| -x).collect();
        ensure(vc.eta(&neg) == eta, || format!("(a) eta({lam:?}) != eta(-lambda)"))?;
        for w in g.weyl_images(&lam) {
            ensure(vc.eta(&w) == eta, || format!("(a) eta({lam:?}) != eta({w:?})"))?;
        }
    }

    // (b) <lambda, chi> >= <w lambda, chi> >= <w0 lambda, chi>
    for _ in 0..5 {
        let lam = g.dominant_rep(&common::random_int(&mut r, g.rank(), 4));
        let chi = g.dominant_rep(&common::random_int(&mut r, g.rank(), 4));
        let dot = |a: &[i64]| a.iter().zip(&chi).map(|(x, y)| x * y).sum::<i64>();
        let (top, bottom) = (dot(&lam), dot(&g.w0_apply(&lam)));
        for w in g.weyl_images(&lam) {
            ensure(top >= dot(&w) && dot(&w) >= bottom, || format!("(b) chain fails at {lam:?}, {chi:?}"))?;
        }
    }

    // (c), (d) windows against the orbit oracle, cardinality constant
    let mut sizes = BTreeSet::new();
    let mut deltas = Vec::new();
    for _ in 0..10 {
        let d = common::random_generic_delta(&mut r, &m);
        let w = m.window_weights(&d, None).map_err(e)?;
        let dominant: BTreeSet<Weight> = w.iter().cloned().collect();
        let oracle: BTreeSet<Weight> = m.orbit_window_oracle(&d).map_err(e)?;
        let oracle_dom: BTreeSet<Weight> = oracle.into_iter().filter(|x| g.is_dominant(x)).collect();
        ensure(dominant == oracle_dom, || format!("(c) window at {d} differs from the orbit oracle"))?;
        sizes.insert(w.len());
        deltas.push(d);
    }
    ensure(sizes.len() == 1, || format!("(d) window sizes {sizes:?}"))?;

    // (e), (f) rewriting decreases (r, p); crossings unimodular and invertible
    let gp = Groupoid::new(&m).map_err(e)?;
    let mut ell = m.zonotope.sample_generic_in_invariants(&g).map_err(e)?.ok_or("(f) no generic point")?;
    if r.gen_bool(0.5) {
        ell = -&ell;
    }
    let mut tried = 0;
    for a in deltas.iter().take(4) {
        let Some(b) = common::nearby_delta(&mut r, &m, a, 2) else { continue };
        let b = &b;
        let fwd = match gp.cross_matrix(a, b, &ell) {
            Ok(x) => x,
            Err(magic_windows::Error::MultipleWalls(_)) => continue,
            Err(x) => return Err(format!("(f) {a} -> {b}: {x}")),
        };
        tried += 1;
        let back = gp.cross_matrix(b, a, &ell).map_err(|x| format!("(f) {b} -> {a}: {x}"))?;
        ensure(fwd.matrix.is_unimodular(), || format!("(f) {a} -> {b} not unimodular"))?;
        ensure(back.compose_after(&fwd).map_err(e)?.is_identity(), || format!("(f) {a} -> {b} -> {a} not identity"))?;

        let tw = TargetWindow::at(&m, b, &ell).map_err(e)?;
        let mut todo: Vec<Weight> = fwd.source.iter().filter(|w| !tw.contains(w)).cloned().collect();
        let mut seen = BTreeSet::new();
        while let Some(chi) = todo.pop() {
            if !seen.insert(chi.clone()) || seen.len() > 400 {
                continue;
            }
            let step = tw.rewrite_relation(&chi).map_err(|x| format!("(e) {chi:?}: {x}"))?;
            let top = rp_of(&m, &tw.shifted(&chi)).map_err(e)?;
            ensure(top == step.rp, || format!("(e) cached measure differs at {chi:?}"))?;
            for mu in step.replacement.terms.keys() {
                let rp = rp_of(&m, &tw.shifted(mu)).map_err(e)?;
                ensure(rp < top, || format!("(e) {mu:?} has {rp:?} >= {top:?} from {chi:?}"))?;
                if !tw.contains(mu) {
                    todo.push(mu.clone());
                }
            }
        }
    }
    ensure(tried > 0, || "(f) no wall crossing was sampled".into())?;

    // (g) LP value of r equals the support ratio
    for _ in 0..5 {
        let v = RatVec((0..g.rank()).map(|_| common::random_rat(&mut r, 4)).collect());
        let a = r_of(&m, &v).map_err(e)?;
        let b = r_of_lp(&m, &v).map_err(e)?;
        ensure(a == b, || format!("(g) r({v}) = {a} but LP gives {b}"))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let reps = common::fixtures(0x5eed, FIXTURES);
    let mut failures = Vec::new();
    for (i, rep) in reps.iter().enumerate() {
        if let Err(msg) = property_checks(rep, 1000 + i as u64) {
            failures.push(format!("fixture {i} {:?} {:?}: {msg}", rep.group.gl_factors, rep.weights));
        }
    }
    let ranks: BTreeSet<usize> = reps.iter().map(|r| r.rank()).collect();
    ensure(ranks.iter().all(|&k| k <= 3) && reps.iter().all(|r| r.weights.len() <= 10), || "fixture bounds".into())?;
    if failures.is_empty() {
        Ok(format!("{FIXTURES} fixtures, ranks {ranks:?}, (a)-(g) hold, {:.2?}", start.elapsed()))
    } else {
        Err(format!("{} failures: {}", failures.len(), failures.join(" | ")))
    }
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for name in ["verify_hilbert1.json", "verify_tsym3.json"] {
        let f: CongruenceFile = parse_json(&fixture(name)).map_err(|e| e.to_string())?;
        let r = report::verify(&f).map_err(|e| e.to_string())?;
        for fam in &r.families {
            ensure(fam.passed && fam.checks > 0, || format!("{name}: {} failed or empty", fam.family))?;
        }
        let n: usize = r.families.iter().map(|f| f.checks).sum();
        parts.push(format!("{name}: {n} identities"));
    }
    within(start.elapsed(), 60)?;
    Ok(format!("{} in {:.2?}", parts.join(", "), start.elapsed()))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut quivers: Vec<QuiverSpec> = (1..=3).map(QuiverSpec::jordan).collect();
    quivers.push(QuiverSpec::new(2, vec![(0, 1)], vec![1, 1], vec![1, 0]).map_err(|e| e.to_string())?);
    for q in &quivers {
        let mut got = q_prime(q).map_err(|e| e.to_string())?.double_weights();
        got.sort();
        ensure(got == q_prime_oracle(q), || format!("multiset identity fails for v={:?}", q.v))?;
    }
    let sg = |z: &[i64], v: &[usize]| stability_generic(&RatVec::from_ints(z), v).unwrap();
    ensure(sg(&[1], &[2]), || "Jordan n=2, zeta=(1)".into())?;
    ensure(!sg(&[1, -1], &[1, 1]), || "v=(1,1), zeta=(1,-1)".into())?;
    ensure(sg(&[2, -1], &[1, 1]), || "v=(1,1), zeta=(2,-1)".into())?;
    within(start.elapsed(), 5)?;
    Ok(format!("Jordan v=1..3 and A2 identities, genericity values, {:.2?}", start.elapsed()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("Hilbert-scheme facets", criterion_1),
        ("Hilbert Kahler walls", criterion_2),
        ("GL2 wall crossing", criterion_3),
        ("r and p invariants", criterion_4),
        ("property suite", criterion_5),
        ("groupoid relations", criterion_6),
        ("quiver oracle", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match out {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
