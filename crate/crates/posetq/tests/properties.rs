//! Generative invariants over random posets: closure/reduction round
//! trips, duality, Dilworth certificates, extension streams, Mirsky
//! duality of rainbow layouts, universal queue validity, and solver
//! agreement with plain enumeration.

mod common;

use common::{brute_force_min_queues, random_poset};
use posetq::construct::{build_kww, build_p, build_planar_hp, build_r, lift_simple};
use posetq::layout::{
    check_queue_assignment, check_rainbow, exact_queue_number, hp_queue_assignment, max_rainbow,
    min_queue_partition,
};
use posetq::poset::{LinearExtension, Poset};
use posetq::rng::SplitMix64;
use posetq::verify::dx_dy;
use proptest::prelude::*;

fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n, 0usize..60, any::<u64>()).prop_map(|(n, density, seed)| {
        let mut rng = SplitMix64::new(seed);
        random_poset(&mut rng, n, density)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_idempotent(p in arb_poset(9)) {
        let reclosed = Poset::from_relations(p.n(), &p.relation_pairs()).unwrap();
        prop_assert_eq!(reclosed, p);
    }

    #[test]
    fn covers_regenerate_the_relation(p in arb_poset(9)) {
        let covers = p.cover_edges();
        let reclosed = Poset::from_relations(p.n(), &covers.edges).unwrap();
        prop_assert_eq!(&reclosed, &p);
        // No cover is implied by two steps.
        for &(u, v) in &covers.edges {
            for k in 0..p.n() {
                prop_assert!(!(p.lt(u, k) && p.lt(k, v)), "cover ({u},{v}) skips {k}");
            }
        }
    }

    #[test]
    fn dual_is_an_involution(p in arb_poset(9)) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        let mut rev: Vec<(usize, usize)> =
            p.cover_edges().edges.iter().map(|&(u, v)| (v, u)).collect();
        rev.sort_unstable();
        prop_assert_eq!(p.dual().cover_edges().edges, rev);
    }

    #[test]
    fn dilworth_certificates_agree(p in arb_poset(10)) {
        let cert = p.width();
        prop_assert_eq!(cert.antichain.len(), cert.width);
        prop_assert_eq!(cert.chains.k, cert.width);
        for (i, &a) in cert.antichain.iter().enumerate() {
            for &b in &cert.antichain[i + 1..] {
                prop_assert!(!p.comparable(a, b));
            }
        }
        p.check_chain_partition(&cert.chains).unwrap();
    }

    #[test]
    fn extension_streams_are_valid(p in arb_poset(7), seed in any::<u64>()) {
        let mut count = 0u64;
        for ext in p.linear_extensions() {
            prop_assert!(p.is_linear_extension(ext.order()).unwrap());
            count += 1;
            if count > 6000 { break; }
        }
        prop_assert!(count >= 1);
        let sampled = p.sample_linear_extension(seed);
        prop_assert!(p.is_linear_extension(sampled.order()).unwrap());
    }

    #[test]
    fn mirsky_duality_and_witness_validity(p in arb_poset(8), seed in any::<u64>()) {
        let covers = p.cover_edges();
        let ext = p.sample_linear_extension(seed);
        let rainbow = max_rainbow(&ext, &covers).unwrap();
        let qa = min_queue_partition(&ext, &covers).unwrap();
        prop_assert_eq!(qa.queues, rainbow.size);
        prop_assert_eq!(rainbow.witness.edges.len(), rainbow.size);
        prop_assert!(check_rainbow(&ext, &rainbow.witness));
        prop_assert!(check_queue_assignment(&ext, &covers, &qa).unwrap());
        if covers.edges.len() <= 9 {
            let points: Vec<(usize, usize)> =
                covers.edges.iter().map(|&(u, v)| (ext.pos(u), ext.pos(v))).collect();
            prop_assert_eq!(qa.queues, brute_force_min_queues(&points));
        }
    }

    #[test]
    fn hp_assignment_is_universal(p in arb_poset(8), seed in any::<u64>()) {
        let cert = p.width();
        let qa = hp_queue_assignment(&p, &cert.chains).unwrap();
        prop_assert!(qa.queues <= cert.width * cert.width);
        let covers = p.cover_edges();
        let mut rng = SplitMix64::new(seed);
        for _ in 0..10 {
            let ext = p.sample_linear_extension(rng.next_u64());
            prop_assert!(check_queue_assignment(&ext, &covers, &qa).unwrap());
        }
    }

    #[test]
    fn solver_matches_enumeration(p in arb_poset(7)) {
        let covers = p.cover_edges();
        let brute = p
            .linear_extensions()
            .map(|l| max_rainbow(&l, &covers).unwrap().size)
            .min()
            .unwrap();
        let search = exact_queue_number(&p, 10_000_000);
        prop_assert!(search.exact);
        prop_assert_eq!(search.qn, brute);
        prop_assert!(check_queue_assignment(&search.best, &covers, &search.assignment).unwrap());
    }

    #[test]
    fn opposition_lengths_match_quadratic_reference(
        perm_seed in any::<u64>(),
        n in 1usize..8,
        ext_seed in any::<u64>(),
    ) {
        // Any two permutations realize the poset that is their
        // intersection, so (lx, ly) below is a realizer by construction.
        let mut rng = SplitMix64::new(perm_seed);
        let shuffle = |rng: &mut SplitMix64| {
            let mut v: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                let j = rng.next_below(i + 1);
                v.swap(i, j);
            }
            v
        };
        let lx = shuffle(&mut rng);
        let ly = shuffle(&mut rng);
        let pos = |v: &[usize]| {
            let mut p = vec![0usize; n];
            for (i, &e) in v.iter().enumerate() { p[e] = i; }
            p
        };
        let (px, py) = (pos(&lx), pos(&ly));
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && px[i] < px[j] && py[i] < py[j] {
                    pairs.push((i, j));
                }
            }
        }
        let poset = Poset::from_relations(n, &pairs).unwrap();
        let realizer = posetq::poset::Realizer {
            lx: LinearExtension::new(&poset, lx).unwrap(),
            ly: LinearExtension::new(&poset, ly).unwrap(),
        };
        poset.check_realizer(&realizer).unwrap();

        let ext = poset.sample_linear_extension(ext_seed);
        let (dx, dy) = dx_dy(&ext, &realizer).unwrap();
        let slow = |l: &LinearExtension, r: &LinearExtension| {
            let seq: Vec<usize> = (0..n).map(|i| r.pos(l.at(i))).collect();
            let mut best = vec![1usize; n];
            let mut out = 1;
            for i in 0..n {
                for j in 0..i {
                    if seq[j] > seq[i] {
                        best[i] = best[i].max(best[j] + 1);
                    }
                }
                out = out.max(best[i]);
            }
            out
        };
        prop_assert_eq!(dx, slow(&ext, &realizer.lx));
        prop_assert_eq!(dy, slow(&ext, &realizer.ly));
    }
}

/// Queue-number is invariant under dualization: reversing a layout of P
/// gives a layout of the dual with the same nestings. Checked on every
/// generated family with at most 12 elements.
#[test]
fn queue_number_of_dual_matches() {
    let mut instances: Vec<(String, Poset)> = Vec::new();
    for u in 1..=3 {
        instances.push((format!("R_{u}"), build_r(u).unwrap().poset));
    }
    instances.push(("P_3".into(), build_p(3).unwrap().poset));
    for w in 1..=3 {
        instances.push((format!("kww_{w}"), build_kww(w).unwrap().poset));
    }
    for r in 1..=4 {
        instances.push((format!("planar_hp_{r}"), build_planar_hp(r).unwrap().poset));
    }
    instances.push(("lift_simple_chain2".into(), lift_simple(&Poset::chain(2)).unwrap().poset));
    instances.push(("chain_5".into(), Poset::chain(5)));
    instances.push(("antichain_5".into(), Poset::antichain(5)));
    for (name, p) in instances {
        assert!(p.n() <= 12, "{name} exceeds the small-instance bound");
        let qn = exact_queue_number(&p, 50_000_000);
        let qn_dual = exact_queue_number(&p.dual(), 50_000_000);
        assert!(qn.exact && qn_dual.exact, "{name}");
        assert_eq!(qn.qn, qn_dual.qn, "{name}: qn vs dual");
    }
}

/// Enumeration counts: n! for antichains (n <= 6), 1 for chains.
#[test]
fn enumeration_counts_for_extremes() {
    let mut fact = 1u64;
    for n in 1..=6u64 {
        fact *= n;
        assert_eq!(
            Poset::antichain(n as usize).linear_extensions().count() as u64,
            fact,
            "antichain {n}"
        );
        assert_eq!(Poset::chain(n as usize).linear_extensions().count(), 1, "chain {n}");
    }
}
