//! Writes DOT renderings: the upward cover graph of R_3 and an arc diagram
//! of K_{2,2} under its optimal extension, arcs colored by queue.
//!
//!     cargo run --example arc_diagram
//!     dot -Tsvg r3-cover.dot -o r3-cover.svg
//!     neato -Tsvg kww2-arcs.dot -o kww2-arcs.svg

use posetq::construct::{build_kww, build_r};
use posetq::dot::{arc_diagram_dot, cover_graph_dot};
use posetq::layout::{exact_queue_number, min_queue_partition};

fn main() -> posetq::Result<()> {
    let r3 = build_r(3)?;
    std::fs::write("r3-cover.dot", cover_graph_dot(&r3.poset))?;
    println!("wrote r3-cover.dot ({} cover edges)", r3.poset.cover_edges().edges.len());

    let kww = build_kww(2)?;
    let covers = kww.poset.cover_edges();
    let search = exact_queue_number(&kww.poset, 1_000_000);
    let qa = min_queue_partition(&search.best, &covers)?;
    std::fs::write("kww2-arcs.dot", arc_diagram_dot(&kww.poset, &search.best, &covers, &qa))?;
    println!(
        "wrote kww2-arcs.dot ({} arcs in {} queues under L = {:?})",
        covers.edges.len(),
        qa.queues,
        search.best.order()
    );
    Ok(())
}
