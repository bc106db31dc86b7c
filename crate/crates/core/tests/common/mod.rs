#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use tbk_core::bergman::{point_from_flag, WeightedFlag};
use tbk_core::bundle::TropicalBundle;
use tbk_core::fan::Fan;
use tbk_core::matroid::Matroid;
use tbk_core::Set;

/// ℙ² with rays (0,1), (1,0), (−1,−1).
pub fn fano_fan() -> Fan {
    Fan::new(2, vec![vec![0, 1], vec![1, 0], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
}

pub fn fano_bundle() -> TropicalBundle {
    let d = vec![vec![2, 0, 0, 1, 0, 0, 1], vec![0, 2, 0, 0, 1, 0, 1], vec![0, 0, 2, 0, 0, 1, 1]];
    TropicalBundle::new(Matroid::fano(), fano_fan(), d).unwrap()
}

/// Random maximal-or-shorter chain of flats with decreasing thresholds in
/// `[lo, hi]`.
pub fn random_bergman<R: Rng>(m: &Matroid, rng: &mut R, lo: i64, hi: i64) -> Vec<i64> {
    let mut chain = Vec::new();
    let mut f = m.closure(Set::EMPTY);
    loop {
        if rng.gen_bool(0.6) && !f.is_empty() {
            chain.push(f);
        }
        let rest: Vec<usize> = (0..m.len()).filter(|&i| !f.contains(i)).collect();
        match rest.choose(rng) {
            Some(&e) => f = m.closure(f.with(e)),
            None => break,
        }
    }
    if chain.last() != Some(&m.ground()) {
        chain.push(m.ground());
    }
    let mut values: Vec<i64> = Vec::new();
    while values.len() < chain.len() {
        let v = rng.gen_range(lo..=hi.max(lo + chain.len() as i64));
        if !values.contains(&v) {
            values.push(v);
        }
    }
    values.sort_unstable_by(|a, b| b.cmp(a));
    point_from_flag(m, &WeightedFlag { levels: values.into_iter().zip(chain).collect() }).unwrap()
}

pub fn subsets(m: usize) -> impl Iterator<Item = Set> {
    (0..1u64 << m).map(Set)
}

/// Rank as the largest intersection with a basis.
pub fn brute_rank(m: &Matroid, s: Set) -> usize {
    m.bases().iter().map(|b| b.intersection(s).len()).max().unwrap()
}

/// Minimal dependent sets, straight from the bases.
pub fn brute_circuits(m: &Matroid) -> Vec<Set> {
    let indep = |s: Set| m.bases().iter().any(|b| s.is_subset(*b));
    let mut out: Vec<Set> = subsets(m.len()).filter(|&s| !indep(s) && s.iter().all(|e| indep(s.without(e)))).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    out
}

pub fn brute_bergman(circuits: &[Set], w: &[i64]) -> bool {
    circuits.iter().all(|c| {
        let vals: Vec<i64> = c.iter().map(|e| w[e]).collect();
        let lo = *vals.iter().min().unwrap();
        vals.iter().filter(|&&v| v == lo).count() >= 2
    })
}

pub fn test_matroids() -> Vec<Matroid> {
    let mut v = Vec::new();
    for m in 1..=6 {
        for r in 1..=m {
            v.push(Matroid::uniform(r, m).unwrap());
        }
    }
    v.push(Matroid::fano());
    v.push(Matroid::vamos());
    v
}
