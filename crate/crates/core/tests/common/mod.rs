#![allow(dead_code)]

use magic_windows::exact::{Rat, RatVec, Weight};
use magic_windows::rep_weights::WeightMultiset;
use magic_windows::root_datum::GroupDatum;
use magic_windows::windows::WindowModel;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_group(r: &mut ChaCha8Rng) -> GroupDatum {
    let choices: [(&[usize], usize); 7] =
        [(&[], 1), (&[], 2), (&[], 3), (&[2], 0), (&[3], 0), (&[2], 1), (&[1, 1], 1)];
    let (f, t) = choices[r.gen_range(0..choices.len())];
    GroupDatum::new(f.to_vec(), t).unwrap()
}

fn random_nonzero(r: &mut ChaCha8Rng, n: usize) -> Weight {
    loop {
        let v: Weight = (0..n).map(|_| r.gen_range(-1..=1)).collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

/// A W-stable quasi-symmetric multiset: Weyl orbits of `{v, -v}` or of the line-balanced `{2v, -v, -v}`.
pub fn random_quasi_symmetric(r: &mut ChaCha8Rng, max_weights: usize) -> WeightMultiset {
    loop {
        let g = random_group(r);
        let mut ws: Vec<Weight> = Vec::new();
        for _ in 0..8 {
            let v = random_nonzero(r, g.rank());
            let orbit = g.weyl_orbit(&v);
            let neg: Vec<Weight> = orbit.iter().map(|w| w.iter().map(|x| -x).collect()).collect();
            let piece: Vec<Weight> = if r.gen_bool(0.3) {
                let dbl = orbit.iter().map(|w| w.iter().map(|x| 2 * x).collect());
                dbl.chain(neg.iter().cloned()).chain(neg.iter().cloned()).collect()
            } else {
                orbit.iter().cloned().chain(neg).collect()
            };
            if ws.len() + piece.len() <= max_weights {
                ws.extend(piece);
            }
        }
        let Ok(rep) = WeightMultiset::new(g, ws) else { continue };
        let Ok(m) = WindowModel::new(&rep) else { continue };
        let d = random_generic_delta(r, &m);
        if !m.window_weights(&d, None).unwrap().is_empty() {
            return rep;
        }
    }
}

/// `count` fixtures from one seed.
pub fn fixtures(seed: u64, count: usize) -> Vec<WeightMultiset> {
    let mut r = rng(seed);
    (0..count).map(|_| random_quasi_symmetric(&mut r, 10)).collect()
}

pub fn random_rat(r: &mut ChaCha8Rng, span: i64) -> Rat {
    let d = r.gen_range(3..=13);
    Rat::new(r.gen_range(-span * d..=span * d).into(), d.into())
}

/// A random invariant point off the arrangement with a boundary-free window.
pub fn random_generic_delta(r: &mut ChaCha8Rng, m: &WindowModel) -> RatVec {
    let g = m.group();
    let arr = m.delta_arrangement().unwrap();
    let k = g.invariant_subspace_basis().len();
    loop {
        let c: Vec<Rat> = (0..k).map(|_| random_rat(r, 2)).collect();
        let d = g.invariant_from_coords(&c);
        if !arr.contains(&d).unwrap() && m.boundary_free(&d).unwrap() {
            return d;
        }
    }
}

pub fn random_int(r: &mut ChaCha8Rng, n: usize, span: i64) -> Weight {
    (0..n).map(|_| r.gen_range(-span..=span)).collect()
}

/// A generic point separated from `a` by between one and `max_walls` walls.
pub fn nearby_delta(r: &mut ChaCha8Rng, m: &WindowModel, a: &RatVec, max_walls: usize) -> Option<RatVec> {
    let g = m.group();
    let arr = m.delta_arrangement().unwrap();
    let k = g.invariant_subspace_basis().len();
    for _ in 0..200 {
        let c: Vec<Rat> = (0..k).map(|_| random_rat(r, 1) / Rat::from_integer(2.into())).collect();
        let d = a + &g.invariant_from_coords(&c);
        if arr.contains(&d).unwrap() || !m.boundary_free(&d).unwrap() {
            continue;
        }
        let n = arr.separation_distance(a, &d).unwrap();
        if (1..=max_walls).contains(&n) {
            return Some(d);
        }
    }
    None
}
