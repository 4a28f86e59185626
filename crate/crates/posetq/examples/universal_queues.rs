//! The chain-pair queue assignment: partition cover edges by the Dilworth
//! chains of their endpoints and every one of the w^2 classes stays
//! nesting-free under EVERY linear extension, not just a chosen one.
//!
//!     cargo run --example universal_queues

use posetq::construct::{build_p, build_r};
use posetq::layout::hp_queue_assignment;
use posetq::poset::Poset;
use posetq::verify::{check_hp_universal, CheckMode};

fn main() -> posetq::Result<()> {
    let r3 = build_r(3)?.poset;
    let cert = r3.width();
    let qa = hp_queue_assignment(&r3, &cert.chains)?;
    let used: std::collections::BTreeSet<usize> = qa.queue_of.iter().copied().collect();
    println!(
        "R_3: width {}, {} queue ids allocated, {} used",
        cert.width,
        qa.queues,
        used.len()
    );

    // Exhaustive over all 160 extensions of R_3.
    let report = check_hp_universal(&r3, CheckMode::Exhaustive)?;
    println!("{report}");
    println!();

    // P_4 has far too many extensions to exhaust; sample instead.
    let p4 = build_p(4)?.poset;
    let report = check_hp_universal(&p4, CheckMode::Sampled { seed: 5, trials: 1000 })?;
    println!("{report}");
    println!();

    // A handful of seeded random posets, exhaustively.
    let mut rng = posetq::rng::SplitMix64::new(17);
    for case in 0..3 {
        let mut pairs = Vec::new();
        for i in 0..8usize {
            for j in i + 1..8 {
                if rng.next_below(100) < 25 {
                    pairs.push((i, j));
                }
            }
        }
        let p = Poset::from_relations(8, &pairs).expect("index-ordered pairs are acyclic");
        let report = check_hp_universal(&p, CheckMode::Exhaustive)?;
        println!(
            "random n=8 case {case}: visited {} extensions -> {}",
            report.visited,
            if report.passed { "ok" } else { "FAIL" }
        );
    }
    Ok(())
}
