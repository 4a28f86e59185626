//! The two lifting operations: each wraps a poset so that the width grows
//! by exactly one while the queue-number grows by at least one, certified
//! here by the exact solver on small inputs.
//!
//!     cargo run --example lifting

use posetq::construct::{build_kww, lift_diagonal, lift_simple};
use posetq::layout::exact_queue_number;
use posetq::poset::Poset;

fn show(name: &str, base: &Poset) {
    let base_qn = exact_queue_number(base, 10_000_000);
    let base_w = base.width().width;
    for (tag, rec) in [
        ("simple", lift_simple(base).unwrap()),
        ("diagonal", lift_diagonal(base).unwrap()),
    ] {
        let lifted_qn = exact_queue_number(&rec.poset, 50_000_000);
        let lifted_w = rec.poset.width().width;
        println!(
            "{name} [{tag:>8}]: width {base_w} -> {lifted_w}, qn {}{} -> {}{}  (n {} -> {})",
            base_qn.qn,
            if base_qn.exact { "" } else { "?" },
            lifted_qn.qn,
            if lifted_qn.exact { "" } else { "?" },
            base.n(),
            rec.poset.n(),
        );
        assert_eq!(lifted_w, base_w + 1, "width must grow by exactly one");
        if base_qn.exact && lifted_qn.exact {
            assert!(lifted_qn.qn > base_qn.qn, "queue-number must grow");
        }
    }
}

fn main() -> posetq::Result<()> {
    show("single", &Poset::antichain(1));
    show("chain_2", &Poset::chain(2));
    show("kww_2", &build_kww(2)?.poset);
    Ok(())
}
