use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::dualgraph::VertexSet;
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// One irreducible component: its geometric genus and the marked points on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub genus: i64,
    /// Marking labels, kept sorted. Duplicates are representable so that
    /// validation can report them.
    pub legs: Vec<u32>,
}

impl Vertex {
    pub fn new(id: impl Into<String>, genus: i64, legs: impl IntoIterator<Item = u32>) -> Self {
        let mut legs: Vec<u32> = legs.into_iter().collect();
        legs.sort_unstable();
        Vertex {
            id: id.into(),
            genus,
            legs,
        }
    }
}

/// Position of an edge in [`MarkedDualGraph::edges`]. Rendered 1-based (`e1`, `e2`, ..).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0 + 1)
    }
}

impl FromStr for EdgeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s.strip_prefix('e').unwrap_or(s);
        match digits.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(EdgeId(k - 1)),
            _ => Err(Error::Malformed(format!("bad edge reference `{s}`"))),
        }
    }
}

/// A problem reported by [`MarkedDualGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Disconnected { components: usize },
    DuplicateLeg(u32),
    MissingLeg(u32),
    LegOutOfRange(u32),
    NegativeGenus { vertex: String, genus: i64 },
    NegativeTotalGenus(i64),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Disconnected { components } => {
                write!(f, "disconnected ({components} components)")
            }
            Violation::DuplicateLeg(l) => write!(f, "duplicate leg label {l}"),
            Violation::MissingLeg(l) => write!(f, "missing leg label {l}"),
            Violation::LegOutOfRange(l) => write!(f, "leg label {l} out of range"),
            Violation::NegativeGenus { vertex, genus } => {
                write!(f, "negative genus {genus} on vertex {vertex}")
            }
            Violation::NegativeTotalGenus(g) => write!(f, "negative total genus {g}"),
        }
    }
}

/// Dual graph of a pointed nodal curve: vertices are components weighted by
/// genus, edges are nodes (loops allowed), legs are marked points.
///
/// Construction only rejects what cannot be represented (duplicate vertex
/// ids, dangling edge endpoints, more than [`MAX_VERTICES`] vertices).
/// Everything else, including connectivity and leg labelling, is reported
/// by [`validate`](Self::validate).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedDualGraph {
    vertices: Vec<Vertex>,
    edges: Vec<[usize; 2]>,
    index: BTreeMap<String, usize>,
}

impl MarkedDualGraph {
    pub fn from_indices(vertices: Vec<Vertex>, edges: Vec<[usize; 2]>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Malformed("graph has no vertices".into()));
        }
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate vertex id `{}`", v.id)));
            }
        }
        if let Some(e) = edges.iter().find(|e| e[0] >= vertices.len() || e[1] >= vertices.len()) {
            return Err(Error::Malformed(format!(
                "edge endpoint {:?} out of range",
                e
            )));
        }
        Ok(MarkedDualGraph {
            vertices,
            edges,
            index,
        })
    }

    pub fn from_ids<S: AsRef<str>>(vertices: Vec<Vertex>, edges: &[(S, S)]) -> Result<Self> {
        let lookup: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id.as_str(), i))
            .collect();
        let resolve = |id: &str| {
            lookup
                .get(id)
                .copied()
                .ok_or_else(|| Error::Malformed(format!("edge references unknown vertex `{id}`")))
        };
        let edges = edges
            .iter()
            .map(|(a, b)| Ok([resolve(a.as_ref())?, resolve(b.as_ref())?]))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(vertices, edges)
    }

    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn id(&self, v: usize) -> &str {
        &self.vertices[v].id
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn require_index(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::Domain(format!("unknown vertex `{id}`")))
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Option<[usize; 2]> {
        self.edges.get(e.0).copied()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertices.len())
    }

    /// Vertex indices sorted by id; the order used when listing multidegrees.
    pub fn id_order(&self) -> Vec<usize> {
        self.index.values().copied().collect()
    }

    /// Number of legs, i.e. `n` for a valid graph.
    pub fn marking_count(&self) -> usize {
        self.vertices.iter().map(|v| v.legs.len()).sum()
    }

    pub fn max_marking(&self) -> Option<u32> {
        self.vertices.iter().filter_map(|v| v.legs.last().copied()).max()
    }

    pub fn leg_vertex(&self, label: u32) -> Option<usize> {
        self.vertices.iter().position(|v| v.legs.contains(&label))
    }

    /// Number of edge endpoints at `v`; a loop contributes two.
    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e[0] == v) as usize + (e[1] == v) as usize)
            .sum()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.edges.iter().any(|e| e[0] == v && e[1] == v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for e in &self.edges {
            if e[0] == v && e[1] != v {
                out.insert(e[1]);
            } else if e[1] == v && e[0] != v {
                out.insert(e[0]);
            }
        }
        out
    }

    /// Edges incident to `v`, each listed once (loops included).
    pub fn incident_edges(&self, v: usize) -> Vec<EdgeId> {
        self.edge_ids()
            .filter(|e| self.edges[e.0].contains(&v))
            .collect()
    }

    /// Arithmetic genus `Σ genus(v) + |E| − |V| + 1`.
    pub fn total_genus(&self) -> i64 {
        let sum: i64 = self.vertices.iter().map(|v| v.genus).sum();
        sum + self.edges.len() as i64 - self.vertices.len() as i64 + 1
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let components = self.components_within(self.all_vertices());
        if components > 1 {
            out.push(Violation::Disconnected { components });
        }
        let mut seen = BTreeSet::new();
        let mut dup = BTreeSet::new();
        for v in &self.vertices {
            if v.genus < 0 {
                out.push(Violation::NegativeGenus {
                    vertex: v.id.clone(),
                    genus: v.genus,
                });
            }
            for &l in &v.legs {
                if !seen.insert(l) {
                    dup.insert(l);
                }
            }
        }
        out.extend(dup.into_iter().map(Violation::DuplicateLeg));
        let n = seen.len() as u32;
        for &l in &seen {
            if l == 0 || l > n {
                out.push(Violation::LegOutOfRange(l));
            }
        }
        for l in 1..=n {
            if !seen.contains(&l) {
                out.push(Violation::MissingLeg(l));
            }
        }
        let g = self.total_genus();
        if g < 0 && components == 1 {
            out.push(Violation::NegativeTotalGenus(g));
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(
                violations.iter().map(ToString::to_string).collect(),
            ))
        }
    }

    /// Number of connected components of the subgraph induced on `set`.
    pub(crate) fn components_within(&self, set: VertexSet) -> usize {
        let adjacency = self.adjacency();
        let mut remaining = set;
        let mut count = 0;
        while let Some(start) = remaining.first() {
            count += 1;
            let mut frontier = VertexSet::singleton(start);
            let mut reached = frontier;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next.union(adjacency[v]);
                }
                frontier = next.intersection(set).difference(reached);
                reached = reached.union(frontier);
            }
            remaining = remaining.difference(reached);
        }
        count
    }

    /// Neighbor masks, one per vertex, excluding the vertex itself.
    pub fn adjacency(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.vertices.len()];
        for &[a, b] in &self.edges {
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj
    }

    /// A copy with marking `label` forgotten (the vertex keeps its other legs).
    pub fn without_leg(&self, label: u32) -> Result<Self> {
        let v = self
            .leg_vertex(label)
            .ok_or_else(|| Error::Domain(format!("no leg labelled {label}")))?;
        let mut out = self.clone();
        out.vertices[v].legs.retain(|&l| l != label);
        Ok(out)
    }

    /// Whether `map` (indexed by vertices of `self`) is a bijection onto the
    /// vertices of `other` carrying genera, legs and the edge multiset across.
    pub fn matches_under(&self, other: &Self, map: &[Option<usize>]) -> bool {
        if map.len() != self.vertex_count() || self.vertex_count() != other.vertex_count() {
            return false;
        }
        let mut hit = vec![false; other.vertex_count()];
        for (v, target) in map.iter().enumerate() {
            let Some(w) = *target else { return false };
            if w >= hit.len() || hit[w] {
                return false;
            }
            hit[w] = true;
            let (a, b) = (&self.vertices[v], &other.vertices[w]);
            if a.genus != b.genus || a.legs != b.legs {
                return false;
            }
        }
        let normalize = |e: [usize; 2]| if e[0] <= e[1] { e } else { [e[1], e[0]] };
        let mut mine: Vec<[usize; 2]> = self
            .edges
            .iter()
            .map(|&[a, b]| normalize([map[a].unwrap(), map[b].unwrap()]))
            .collect();
        let mut theirs: Vec<[usize; 2]> = other.edges.iter().map(|&e| normalize(e)).collect();
        mine.sort_unstable();
        theirs.sort_unstable();
        mine == theirs
    }

    pub(crate) fn into_parts(self) -> (Vec<Vertex>, Vec<[usize; 2]>) {
        (self.vertices, self.edges)
    }

    /// A vertex id not yet used in the graph, derived from `base`.
    pub fn fresh_id(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}.{k}"))
            .find(|id| self.index_of(id).is_none())
            .unwrap()
    }
}

/// Convenience builder addressing vertices by id.
#[derive(Default, Debug, Clone)]
pub struct GraphBuilder {
    vertices: Vec<Vertex>,
    edges: Vec<(String, String)>,
}

impl GraphBuilder {
    pub fn vertex(mut self, id: &str, genus: i64, legs: impl IntoIterator<Item = u32>) -> Self {
        self.vertices.push(Vertex::new(id, genus, legs));
        self
    }

    pub fn edge(mut self, a: &str, b: &str) -> Self {
        self.edges.push((a.to_string(), b.to_string()));
        self
    }

    pub fn edges(mut self, a: &str, b: &str, count: usize) -> Self {
        for _ in 0..count {
            self = self.edge(a, b);
        }
        self
    }

    pub fn build(self) -> Result<MarkedDualGraph> {
        MarkedDualGraph::from_ids(self.vertices, &self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_valid_graph() {
        let g = MarkedDualGraph::builder().vertex("A", 3, []).build().unwrap();
        assert!(g.validate().is_empty());
        assert_eq!(g.total_genus(), 3);
    }

    #[test]
    fn two_vertices_without_edges_are_disconnected() {
        let g = MarkedDualGraph::builder()
            .vertex("A", 1, [])
            .vertex("B", 2, [])
            .build()
            .unwrap();
        let v = g.validate();
        assert!(matches!(v[0], Violation::Disconnected { components: 2 }));
        assert!(v[0].to_string().starts_with("disconnected"));
    }

    #[test]
    fn duplicate_leg_label_is_reported() {
        let g = MarkedDualGraph::builder().vertex("A", 3, [1, 1]).build().unwrap();
        let v = g.validate();
        assert!(v.contains(&Violation::DuplicateLeg(1)));
        assert!(v.iter().any(|x| x.to_string() == "duplicate leg label 1"));
    }

    #[test]
    fn missing_and_negative_are_reported() {
        let g = MarkedDualGraph::builder()
            .vertex("A", -1, [2])
            .build()
            .unwrap();
        let v = g.validate();
        assert!(v.contains(&Violation::MissingLeg(1)));
        assert!(v.contains(&Violation::LegOutOfRange(2)));
        assert!(v.iter().any(|x| matches!(x, Violation::NegativeGenus { .. })));
    }

    #[test]
    fn total_genus_examples() {
        let g2 = MarkedDualGraph::builder()
            .vertex("A", 1, [])
            .vertex("B", 1, [])
            .edges("A", "B", 2)
            .build()
            .unwrap();
        assert_eq!(g2.total_genus(), 3);
        let looped = MarkedDualGraph::builder()
            .vertex("A", 0, [])
            .edge("A", "A")
            .build()
            .unwrap();
        assert_eq!(looped.total_genus(), 1);
        assert_eq!(looped.valence(0), 2);
    }

    #[test]
    fn construction_rejects_unrepresentable_input() {
        let dup = MarkedDualGraph::builder().vertex("A", 1, []).vertex("A", 1, []).build();
        assert!(matches!(dup, Err(Error::Malformed(_))));
        let dangling = MarkedDualGraph::builder().vertex("A", 1, []).edge("A", "Z").build();
        assert!(matches!(dangling, Err(Error::Malformed(_))));
    }

    #[test]
    fn edge_ids_render_one_based() {
        assert_eq!(EdgeId(0).to_string(), "e1");
        assert_eq!("e2".parse::<EdgeId>().unwrap(), EdgeId(1));
        assert_eq!("3".parse::<EdgeId>().unwrap(), EdgeId(2));
        assert!("e0".parse::<EdgeId>().is_err());
    }

    #[test]
    fn fresh_ids_avoid_collisions() {
        let g = MarkedDualGraph::builder()
            .vertex("x1", 3, [])
            .vertex("x1.1", 0, [])
            .edge("x1", "x1.1")
            .build()
            .unwrap();
        assert_eq!(g.fresh_id("x1"), "x1.2");
        assert_eq!(g.fresh_id("y"), "y");
    }
}
