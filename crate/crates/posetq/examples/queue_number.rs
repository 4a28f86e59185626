//! Exact queue-numbers of small posets via branch and bound over
//! linear-extension prefixes.
//!
//!     cargo run --example queue_number

use posetq::construct::{build_kww, build_p, build_planar_hp, build_r};
use posetq::layout::exact_queue_number;
use posetq::poset::Poset;

fn report(name: &str, p: &Poset) {
    let search = exact_queue_number(p, 10_000_000);
    println!(
        "qn({name}) = {}{} (n = {}, {} search nodes), best L = {:?}",
        search.qn,
        if search.exact { "" } else { "?" },
        p.n(),
        search.nodes,
        search.best.order()
    );
}

fn main() -> posetq::Result<()> {
    report("chain_6", &Poset::chain(6));
    report("antichain_6", &Poset::antichain(6));
    // Complete bipartite posets meet their width.
    for w in 1..=3 {
        report(&format!("kww_{w}"), &build_kww(w)?.poset);
    }
    report("R_3", &build_r(3)?.poset);
    report("P_3", &build_p(3)?.poset);
    for r in 1..=3 {
        report(&format!("planar_hp_{r}"), &build_planar_hp(r)?.poset);
    }
    Ok(())
}
