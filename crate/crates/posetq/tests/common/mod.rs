//! Shared helpers for the integration suites: seeded random posets and the
//! small named corpus.

#![allow(dead_code)]

use posetq::construct::{build_kww, build_planar_hp, build_r, lift_simple};
use posetq::poset::Poset;
use posetq::rng::SplitMix64;

/// Random poset: each index-ordered pair (i, j), i < j, becomes a relation
/// with probability `percent`/100, then everything closes transitively.
/// Index-ordered generators can never cycle.
pub fn random_poset(rng: &mut SplitMix64, n: usize, percent: usize) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_below(100) < percent {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_relations(n, &pairs).expect("index-ordered pairs are acyclic")
}

/// Random poset of width at most 2: two chains with random cross
/// relations (added only downward in index order to stay acyclic).
pub fn random_width2_poset(rng: &mut SplitMix64, n: usize, percent: usize) -> Poset {
    let split = n / 2;
    let mut pairs = Vec::new();
    for i in 1..split {
        pairs.push((i - 1, i));
    }
    for i in split + 1..n {
        pairs.push((i - 1, i));
    }
    for i in 0..split {
        for j in split..n {
            if rng.next_below(100) < percent {
                if rng.next_below(2) == 0 {
                    pairs.push((i, j));
                } else {
                    pairs.push((j, i));
                }
            }
        }
    }
    // Cross relations in both directions can cycle; retry until acyclic.
    match Poset::from_relations(n, &pairs) {
        Ok(p) => p,
        Err(_) => random_width2_poset(rng, n, percent),
    }
}

/// The named corpus of posets with at most 9 elements used by the
/// exhaustive acceptance checks.
pub fn small_corpus() -> Vec<(String, Poset)> {
    let mut corpus: Vec<(String, Poset)> = Vec::new();
    for n in 1..=5 {
        corpus.push((format!("chain_{n}"), Poset::chain(n)));
    }
    for n in 1..=5 {
        corpus.push((format!("antichain_{n}"), Poset::antichain(n)));
    }
    for w in 1..=3 {
        corpus.push((format!("kww_{w}"), build_kww(w).unwrap().poset));
    }
    corpus.push(("R_1".into(), build_r(1).unwrap().poset));
    corpus.push(("R_2".into(), build_r(2).unwrap().poset));
    for r in 1..=3 {
        corpus.push((format!("planar_hp_{r}"), build_planar_hp(r).unwrap().poset));
    }
    corpus.push(("lift_simple_1".into(), lift_simple(&Poset::antichain(1)).unwrap().poset));
    corpus.push((
        "diamond".into(),
        Poset::from_relations(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap(),
    ));
    corpus.push((
        "fence_7".into(),
        Poset::from_relations(7, &[(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (6, 5)]).unwrap(),
    ));
    debug_assert!(corpus.iter().all(|(_, p)| p.n() <= 9));
    corpus
}

/// Strict nesting of two position pairs.
pub fn nested(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.1 < a.1) || (b.0 < a.0 && a.1 < b.1)
}

/// Exhaustive minimum queue count: smallest k admitting an edge k-coloring
/// with no monochromatic nested pair. Independent of the Mirsky route used
/// by the library.
pub fn brute_force_min_queues(points: &[(usize, usize)]) -> usize {
    if points.is_empty() {
        return 0;
    }
    fn feasible(points: &[(usize, usize)], k: usize, color: &mut Vec<usize>, at: usize) -> bool {
        if at == points.len() {
            return true;
        }
        for c in 0..k {
            if (0..at).all(|f| color[f] != c || !nested(points[f], points[at])) {
                color[at] = c;
                if feasible(points, k, color, at + 1) {
                    return true;
                }
            }
        }
        false
    }
    for k in 1..=points.len() {
        let mut color = vec![usize::MAX; points.len()];
        if feasible(points, k, &mut color, 0) {
            return k;
        }
    }
    unreachable!()
}
