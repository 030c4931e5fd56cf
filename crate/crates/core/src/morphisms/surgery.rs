use crate::dualgraph::{MarkedDualGraph, Vertex};
use crate::error::Result;

/// Mutable working copy of a graph where vertices and edges are deleted
/// lazily, so that indices stay meaningful until [`Surgery::finish`].
#[derive(Clone, Debug)]
pub(crate) struct Surgery {
    pub vertices: Vec<Option<Vertex>>,
    pub edges: Vec<Option<[usize; 2]>>,
}

pub(crate) struct Finished {
    pub graph: MarkedDualGraph,
    pub vertex_map: Vec<Option<usize>>,
    pub edge_map: Vec<Option<usize>>,
}

impl Surgery {
    pub fn new(graph: &MarkedDualGraph) -> Self {
        let (vertices, edges) = graph.clone().into_parts();
        Surgery {
            vertices: vertices.into_iter().map(Some).collect(),
            edges: edges.into_iter().map(Some).collect(),
        }
    }

    pub fn vertex_mut(&mut self, v: usize) -> &mut Vertex {
        self.vertices[v].as_mut().expect("vertex was removed")
    }

    /// Removes `v` together with every edge touching it.
    pub fn remove_vertex(&mut self, v: usize) {
        self.vertices[v] = None;
        for e in self.edges.iter_mut() {
            if e.is_some_and(|[a, b]| a == v || b == v) {
                *e = None;
            }
        }
    }

    pub fn push_vertex(&mut self, vertex: Vertex) -> usize {
        self.vertices.push(Some(vertex));
        self.vertices.len() - 1
    }

    pub fn push_edge(&mut self, a: usize, b: usize) -> usize {
        self.edges.push(Some([a, b]));
        self.edges.len() - 1
    }

    /// Live edges at `v`, ascending; a loop is listed once.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].is_some_and(|[a, b]| a == v || b == v))
            .collect()
    }

    pub fn fresh_id(&self, base: &str) -> String {
        let taken = |id: &str| self.vertices.iter().flatten().any(|v| v.id == id);
        if !taken(base) {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}.{k}"))
            .find(|id| !taken(id))
            .unwrap()
    }

    pub fn finish(self) -> Result<Finished> {
        let mut vertex_map = Vec::with_capacity(self.vertices.len());
        let mut vertices = Vec::new();
        for v in self.vertices {
            match v {
                Some(v) => {
                    vertex_map.push(Some(vertices.len()));
                    vertices.push(v);
                }
                None => vertex_map.push(None),
            }
        }
        let mut edge_map = Vec::with_capacity(self.edges.len());
        let mut edges = Vec::new();
        for e in self.edges {
            match e {
                Some([a, b]) => {
                    edge_map.push(Some(edges.len()));
                    edges.push([vertex_map[a].unwrap(), vertex_map[b].unwrap()]);
                }
                None => edge_map.push(None),
            }
        }
        Ok(Finished {
            graph: MarkedDualGraph::from_indices(vertices, edges)?,
            vertex_map,
            edge_map,
        })
    }
}
