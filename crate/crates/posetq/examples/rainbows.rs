//! Rainbows and queue partitions of one layout: fix a linear extension,
//! find the largest nested edge family, and split the cover edges into
//! that many queues.
//!
//!     cargo run --example rainbows

use posetq::construct::build_kww;
use posetq::layout::{check_queue_assignment, max_rainbow, min_queue_partition};
use posetq::poset::LinearExtension;

fn main() -> posetq::Result<()> {
    let record = build_kww(3)?;
    let poset = &record.poset;
    let covers = poset.cover_edges();

    // The all-bottoms-then-all-tops order in reversed top order stacks a
    // full rainbow.
    let bad = LinearExtension::new(poset, vec![0, 1, 2, 5, 4, 3])?;
    let rainbow = max_rainbow(&bad, &covers)?;
    println!("extension {:?}", bad.order());
    println!("  max rainbow = {}", rainbow.size);
    println!("  witness     = {:?}", rainbow.witness.edges);

    let qa = min_queue_partition(&bad, &covers)?;
    println!("  queues      = {}", qa.queues);
    for q in 0..qa.queues {
        let members: Vec<String> = covers
            .edges
            .iter()
            .zip(&qa.queue_of)
            .filter(|(_, &id)| id == q)
            .map(|(&(u, v), _)| format!("({u},{v})"))
            .collect();
        println!("    queue {q}: {}", members.join(" "));
    }
    assert!(check_queue_assignment(&bad, &covers, &qa)?);

    // A better extension interleaves the tops and needs only width-many
    // queues.
    let good = LinearExtension::new(poset, vec![0, 1, 2, 3, 4, 5])?;
    let rainbow = max_rainbow(&good, &covers)?;
    println!("extension {:?}", good.order());
    println!("  max rainbow = {}", rainbow.size);
    println!("  witness     = {:?}", rainbow.witness.edges);
    Ok(())
}
