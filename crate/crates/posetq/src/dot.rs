//! DOT emission: upward-oriented cover graphs and arc diagrams of queue
//! layouts.

use crate::layout::QueueAssignment;
use crate::poset::{CoverGraph, LinearExtension, Poset};

fn node_name(p: &Poset, i: usize) -> String {
    match p.label(i) {
        Some(l) if !l.is_empty() => format!("\"{i}:{}\"", l.replace('"', "\\\"")),
        _ => format!("\"{i}\""),
    }
}

/// The directed cover graph, edges oriented upward (rankdir=BT so covers
/// point up when rendered).
pub fn cover_graph_dot(p: &Poset) -> String {
    let covers = p.cover_edges();
    let mut out = String::from("digraph cover {\n  rankdir=BT;\n  node [shape=circle];\n");
    for i in 0..p.n() {
        out.push_str(&format!("  {};\n", node_name(p, i)));
    }
    for &(u, v) in &covers.edges {
        out.push_str(&format!("  {} -> {};\n", node_name(p, u), node_name(p, v)));
    }
    out.push_str("}\n");
    out
}

const PALETTE: [&str; 12] = [
    "crimson", "royalblue", "forestgreen", "darkorange", "purple", "teal", "goldenrod",
    "deeppink", "steelblue", "olive", "sienna", "slategray",
];

/// Arc diagram: vertices on a line in extension order, one arc per cover
/// edge, colored by queue id.
pub fn arc_diagram_dot(
    p: &Poset,
    ext: &LinearExtension,
    covers: &CoverGraph,
    qa: &QueueAssignment,
) -> String {
    let mut out = String::from("graph arcs {\n  rankdir=LR;\n  node [shape=plaintext];\n");
    // Invisible spine pins the extension order.
    for pos in 0..p.n() {
        let e = ext.at(pos);
        out.push_str(&format!("  {} [label=\"{}\"];\n", node_name(p, e), display_label(p, e)));
    }
    for pos in 1..p.n() {
        out.push_str(&format!(
            "  {} -- {} [style=invis, weight=100];\n",
            node_name(p, ext.at(pos - 1)),
            node_name(p, ext.at(pos))
        ));
    }
    for (idx, &(u, v)) in covers.edges.iter().enumerate() {
        let q = qa.queue_of[idx];
        let color = PALETTE[q % PALETTE.len()];
        out.push_str(&format!(
            "  {} -- {} [constraint=false, color={color}, label=\"q{q}\"];\n",
            node_name(p, u),
            node_name(p, v)
        ));
    }
    out.push_str("}\n");
    out
}

fn display_label(p: &Poset, i: usize) -> String {
    match p.label(i) {
        Some(l) if !l.is_empty() => l.replace('"', "\\\""),
        _ => i.to_string(),
    }
}
