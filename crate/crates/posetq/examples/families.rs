//! Builds every generated family and prints its size, certified width, and
//! named parts.
//!
//!     cargo run --example families

use posetq::construct::{
    build_antichain_es, build_kww, build_p, build_planar_hp, build_r, ConstructionRecord,
};

fn describe(rec: &ConstructionRecord) {
    let cert = rec.poset.width().clone();
    let parts: Vec<String> = rec
        .parts
        .iter()
        .map(|(name, elems)| format!("{name}({})", elems.len()))
        .collect();
    println!(
        "{}({:>2}): n = {:>4}, width = {:>2}, covers = {:>4}, parts: {}",
        rec.family,
        rec.parameter,
        rec.poset.n(),
        cert.width,
        rec.poset.cover_edges().edges.len(),
        parts.join(" ")
    );
}

fn main() -> posetq::Result<()> {
    for u in 1..=6 {
        describe(&build_r(u)?);
    }
    for w in 1..=6 {
        describe(&build_p(w)?);
    }
    for u in [4, 9] {
        describe(&build_antichain_es(u)?);
    }
    for w in 1..=3 {
        describe(&build_kww(w)?);
    }
    for r in 1..=4 {
        describe(&build_planar_hp(r)?);
    }

    // The reinforcement family doubles in size per width step while the
    // lifted family adds two width units per level.
    println!();
    for u in 1..=10 {
        print!("r({u}) = {}  ", posetq::construct::r_count(u));
    }
    println!();
    for w in 1..=9 {
        print!("p({w}) = {}  ", posetq::construct::p_count(w));
    }
    println!();
    Ok(())
}
