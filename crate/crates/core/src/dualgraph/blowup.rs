use crate::dualgraph::{EdgeId, MarkedDualGraph, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowUp {
    pub graph: MarkedDualGraph,
    /// Old vertex index to new vertex index. Blow-ups only append, so this is the identity.
    pub vertex_map: Vec<usize>,
    /// Indices of the inserted genus 0 components, one per blown-up edge in ascending edge order.
    pub new_vertices: Vec<usize>,
}

/// Replaces each edge in `edges` by a chain through a new legless genus 0
/// component. Edge `e = (a, b)` keeps its index as `(a, x)` and `(x, b)` is
/// appended.
pub fn blow_up_edges(graph: &MarkedDualGraph, edges: &[EdgeId]) -> Result<BlowUp> {
    let mut chosen: Vec<EdgeId> = edges.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    if let Some(bad) = chosen.iter().find(|e| e.0 >= graph.edge_count()) {
        return Err(Error::Domain(format!("no edge {bad}")));
    }
    let (mut vertices, mut edge_list) = graph.clone().into_parts();
    let mut new_vertices = Vec::with_capacity(chosen.len());
    for e in chosen {
        let base = format!("x{}", e.0 + 1);
        let taken = |id: &str| vertices.iter().any(|v: &Vertex| v.id == id);
        let id = if taken(&base) {
            (1..).map(|k| format!("{base}.{k}")).find(|id| !taken(id)).unwrap()
        } else {
            base
        };
        let x = vertices.len();
        vertices.push(Vertex::new(id, 0, []));
        let [a, b] = edge_list[e.0];
        edge_list[e.0] = [a, x];
        edge_list.push([x, b]);
        new_vertices.push(x);
    }
    let out = MarkedDualGraph::from_indices(vertices, edge_list)?;
    Ok(BlowUp {
        graph: out,
        vertex_map: (0..graph.vertex_count()).collect(),
        new_vertices,
    })
}
