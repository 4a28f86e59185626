//! Exhaustively checks the reinforcement guarantee on R_u: every linear
//! extension, read against the recorded realizer (L_x, L_y), contains an
//! increasing run that is decreasing in L_x or in L_y, with the two
//! opposition lengths summing to at least u + 1.
//!
//!     cargo run --release --example reinforcement

use posetq::verify::{check_lemma_goodr, check_r_guarantee, CheckMode};

fn main() -> posetq::Result<()> {
    for u in 1..=4 {
        let report = check_lemma_goodr(u, CheckMode::Exhaustive)?;
        println!(
            "R_{u}: min(d_x + d_y) = {} over {} extensions (need >= {}) -> {}",
            report.observed,
            report.visited,
            report.required,
            if report.passed { "ok" } else { "FAIL" }
        );
    }
    for u in 1..=4 {
        let report = check_r_guarantee(u, CheckMode::Exhaustive)?;
        println!(
            "R_{u}: guaranteed rainbow q = {} (need >= {}) -> {}",
            report.observed,
            report.required,
            if report.passed { "ok" } else { "FAIL" }
        );
    }
    // Beyond u = 4 exhaustion is out of reach; sampling can still falsify.
    let report = check_lemma_goodr(5, CheckMode::Sampled { seed: 7, trials: 20_000 })?;
    println!(
        "R_5 (sampled): min(d_x + d_y) = {} over {} samples (need >= {}) -> {}",
        report.observed,
        report.visited,
        report.required,
        if report.passed { "ok" } else { "FAIL" }
    );
    Ok(())
}
