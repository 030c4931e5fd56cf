use std::fmt::Write;

use crate::dualgraph::MarkedDualGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Genus as the vertex label, legs as point-shaped stubs, exceptional
/// components drawn as boxes.
pub fn to_dot(graph: &MarkedDualGraph) -> String {
    let mut out = String::from("graph G {\n");
    for (v, vx) in graph.vertices().iter().enumerate() {
        let exceptional = vx.genus == 0
            && vx.legs.is_empty()
            && graph.valence(v) == 2
            && !graph.has_loop(v);
        let shape = if exceptional { "box" } else { "circle" };
        let _ = writeln!(
            out,
            "  {} [label={}, xlabel={}, shape={shape}];",
            quote(&vx.id),
            quote(&vx.genus.to_string()),
            quote(&vx.id)
        );
    }
    for (v, vx) in graph.vertices().iter().enumerate() {
        for leg in &vx.legs {
            let stub = quote(&format!("leg{leg}"));
            let _ = writeln!(out, "  {stub} [shape=point];");
            let _ = writeln!(out, "  {} -- {stub} [label={}];", quote(graph.id(v)), quote(&leg.to_string()));
        }
    }
    for (e, &[a, b]) in graph.edges().iter().enumerate() {
        let _ = writeln!(
            out,
            "  {} -- {} [label=\"e{}\"];",
            quote(graph.id(a)),
            quote(graph.id(b)),
            e + 1
        );
    }
    out.push_str("}\n");
    out
}
