use crate::dualgraph::{EdgeId, MarkedDualGraph, VertexSet};
use crate::error::{Error, Result};

/// A maximal rational tail: a genus 0 tree of components meeting the rest of
/// the curve in a single node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalTail {
    pub vertices: VertexSet,
    pub attaching_edge: EdgeId,
    /// The tail component on the attaching edge.
    pub foot: usize,
    /// The component outside the tail on the attaching edge.
    pub anchor: usize,
}

/// A maximal rational bridge, decomposed as a chain `E_1 .. E_l` joining two
/// core components, with rational tails hanging off chain components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalBridge {
    pub chain: Vec<usize>,
    /// `attached_tails[i]` hang off `chain[i]`.
    pub attached_tails: Vec<Vec<RationalTail>>,
    /// `attaching_edges[0]` meets `chain[0]`, `attaching_edges[1]` meets the last chain vertex.
    pub attaching_edges: [EdgeId; 2],
    /// Outside endpoints of the two attaching edges, in the same order.
    pub endpoints: [usize; 2],
}

impl RationalBridge {
    pub fn chain_set(&self) -> VertexSet {
        self.chain.iter().copied().collect()
    }

    pub fn vertices(&self) -> VertexSet {
        self.attached_tails
            .iter()
            .flatten()
            .fold(self.chain_set(), |acc, t| acc.union(t.vertices))
    }
}

/// What a vertex is, relative to the tail/bridge decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Core,
    /// Member of a standalone maximal tail (index into `tails`).
    Tail(usize),
    /// Chain component `position` of bridge `bridge`.
    Chain { bridge: usize, position: usize },
    /// Member of a tail attached to a bridge chain component.
    BridgeTail { bridge: usize, position: usize },
}

/// Decomposition of a graph into core, maximal rational tails and maximal
/// rational bridges, together with its exceptional and destabilizing
/// components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Maximal tails anchored on core components. Tails hanging off a bridge
    /// are recorded in that bridge instead.
    pub tails: Vec<RationalTail>,
    pub bridges: Vec<RationalBridge>,
    pub core: VertexSet,
    pub exceptional: VertexSet,
    pub destabilizing: VertexSet,
    roles: Vec<VertexRole>,
}

impl Classification {
    pub fn role(&self, v: usize) -> VertexRole {
        self.roles[v]
    }

    /// Every maximal tail, standalone or recorded inside a bridge.
    pub fn all_tails(&self) -> impl Iterator<Item = &RationalTail> {
        self.tails
            .iter()
            .chain(self.bridges.iter().flat_map(|b| b.attached_tails.iter().flatten()))
    }

    pub fn tail_vertices(&self) -> VertexSet {
        self.all_tails()
            .fold(VertexSet::EMPTY, |acc, t| acc.union(t.vertices))
    }

    pub fn chain_vertices(&self) -> VertexSet {
        self.bridges
            .iter()
            .fold(VertexSet::EMPTY, |acc, b| acc.union(b.chain_set()))
    }

    /// Number of standalone maximal tails attached to a vertex of `z`.
    pub fn tails_meeting(&self, z: VertexSet) -> i64 {
        self.tails.iter().filter(|t| z.contains(t.anchor)).count() as i64
    }
}

/// Rational tails and bridges, core, exceptional and destabilizing sets.
///
/// Requires a valid graph of total genus at least 2.
pub fn classify(graph: &MarkedDualGraph) -> Result<Classification> {
    graph.ensure_valid()?;
    let genus = graph.total_genus();
    if genus < 2 {
        return Err(Error::GenusTooSmall { genus, required: 2 });
    }

    let tails = maximal_tails(graph)?;
    let in_tails = tails
        .iter()
        .fold(VertexSet::EMPTY, |acc, t| acc.union(t.vertices));
    let reduced = graph.all_vertices().difference(in_tails);

    let reduced_valence = |v: usize| -> usize {
        graph
            .edges()
            .iter()
            .filter(|e| e[0] != e[1])
            .filter(|e| {
                (e[0] == v && reduced.contains(e[1])) || (e[1] == v && reduced.contains(e[0]))
            })
            .count()
    };
    let chain_candidates: VertexSet = reduced
        .iter()
        .filter(|&v| graph.vertex(v).genus == 0 && !graph.has_loop(v) && reduced_valence(v) == 2)
        .collect();

    let mut bridges = Vec::new();
    let mut unvisited = chain_candidates;
    while let Some(start) = unvisited.first() {
        let component = component_of(graph, start, chain_candidates);
        unvisited = unvisited.difference(component);
        bridges.push(chain_bridge(graph, component, reduced)?);
    }
    bridges.sort_by_key(|b| b.attaching_edges);

    let mut standalone = Vec::new();
    for tail in tails {
        match bridges
            .iter_mut()
            .find(|b| b.chain.contains(&tail.anchor))
        {
            Some(bridge) => {
                let pos = bridge.chain.iter().position(|&c| c == tail.anchor).unwrap();
                bridge.attached_tails[pos].push(tail);
            }
            None => standalone.push(tail),
        }
    }

    let chain_vertices = bridges
        .iter()
        .fold(VertexSet::EMPTY, |acc, b| acc.union(b.chain_set()));
    let core = reduced.difference(chain_vertices);

    let mut roles = vec![VertexRole::Core; graph.vertex_count()];
    let mut claimed = core;
    let mut claim = |set: VertexSet, role: VertexRole, roles: &mut Vec<VertexRole>| -> Result<()> {
        if !set.is_disjoint(claimed) {
            return Err(Error::Internal(format!(
                "maximal tails and bridges overlap on {:?}",
                set.intersection(claimed)
                    .iter()
                    .map(|v| graph.id(v).to_string())
                    .collect::<Vec<_>>()
            )));
        }
        claimed = claimed.union(set);
        for v in set {
            roles[v] = role;
        }
        Ok(())
    };
    for (i, t) in standalone.iter().enumerate() {
        claim(t.vertices, VertexRole::Tail(i), &mut roles)?;
    }
    for (b, bridge) in bridges.iter().enumerate() {
        for (position, &c) in bridge.chain.iter().enumerate() {
            claim(
                VertexSet::singleton(c),
                VertexRole::Chain { bridge: b, position },
                &mut roles,
            )?;
            for t in &bridge.attached_tails[position] {
                claim(t.vertices, VertexRole::BridgeTail { bridge: b, position }, &mut roles)?;
            }
        }
    }
    if claimed != graph.all_vertices() {
        return Err(Error::Internal("vertex partition is incomplete".into()));
    }

    let mut exceptional = VertexSet::EMPTY;
    let mut destabilizing = VertexSet::EMPTY;
    for v in 0..graph.vertex_count() {
        let vx = graph.vertex(v);
        if vx.genus != 0 || graph.has_loop(v) {
            continue;
        }
        let special = graph.valence(v) + vx.legs.len();
        if special == 2 {
            destabilizing.insert(v);
            if vx.legs.is_empty() {
                exceptional.insert(v);
            }
        }
    }

    Ok(Classification {
        tails: standalone,
        bridges,
        core,
        exceptional,
        destabilizing,
        roles,
    })
}

/// Maximal rational tails: sides of disconnecting edges that are genus 0
/// trees, keeping only those not contained in a larger one.
fn maximal_tails(graph: &MarkedDualGraph) -> Result<Vec<RationalTail>> {
    let mut candidates: Vec<RationalTail> = Vec::new();
    for e in graph.edge_ids() {
        let [a, b] = graph.edge(e).unwrap();
        if a == b {
            continue;
        }
        let side_a = reachable_without(graph, a, e);
        if side_a.contains(b) {
            continue;
        }
        let side_b = graph.all_vertices().difference(side_a);
        for (side, foot, anchor) in [(side_a, a, b), (side_b, b, a)] {
            if graph.genus_of(side) == 0 {
                candidates.push(RationalTail {
                    vertices: side,
                    attaching_edge: e,
                    foot,
                    anchor,
                });
            }
        }
    }
    let maximal: Vec<RationalTail> = candidates
        .iter()
        .filter(|t| {
            !candidates
                .iter()
                .any(|u| u.vertices != t.vertices && t.vertices.is_subset(u.vertices))
        })
        .cloned()
        .collect();
    for (i, t) in maximal.iter().enumerate() {
        for u in &maximal[i + 1..] {
            if !t.vertices.is_disjoint(u.vertices) {
                return Err(Error::Internal(format!(
                    "maximal rational tails at {} and {} overlap",
                    t.attaching_edge, u.attaching_edge
                )));
            }
        }
    }
    Ok(maximal)
}

fn reachable_without(graph: &MarkedDualGraph, start: usize, skip: EdgeId) -> VertexSet {
    let mut reached = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for (i, &[a, b]) in graph.edges().iter().enumerate() {
            if i == skip.0 {
                continue;
            }
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !reached.contains(other) {
                reached.insert(other);
                stack.push(other);
            }
        }
    }
    reached
}

fn component_of(graph: &MarkedDualGraph, start: usize, within: VertexSet) -> VertexSet {
    let adjacency = graph.adjacency();
    let mut reached = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in adjacency[v].intersection(within) {
            if !reached.contains(w) {
                reached.insert(w);
                stack.push(w);
            }
        }
    }
    reached
}

/// Orders a component of chain candidates into a bridge. Every member has
/// exactly two edges into the tail-free part of the graph, so the component
/// is a path (or a closed cycle, which cannot occur in genus ≥ 2).
fn chain_bridge(
    graph: &MarkedDualGraph,
    component: VertexSet,
    reduced: VertexSet,
) -> Result<RationalBridge> {
    let internal = graph.internal_edge_count(component);
    if internal as usize != component.len() - 1 {
        return Err(Error::Internal(
            "rational chain closes up into a cycle".into(),
        ));
    }
    let mut external: Vec<(EdgeId, usize, usize)> = Vec::new();
    for e in graph.edge_ids() {
        let [a, b] = graph.edge(e).unwrap();
        if component.contains(a) && !component.contains(b) && reduced.contains(b) {
            external.push((e, a, b));
        } else if component.contains(b) && !component.contains(a) && reduced.contains(a) {
            external.push((e, b, a));
        }
    }
    if external.len() != 2 {
        return Err(Error::Internal(format!(
            "rational chain has {} attaching edges",
            external.len()
        )));
    }
    external.sort_by_key(|x| x.0);
    let (first_edge, first_vertex, first_outside) = external[0];
    let (last_edge, _, last_outside) = external[1];

    let mut chain = vec![first_vertex];
    let mut used = vec![first_edge];
    while chain.len() < component.len() {
        let current = *chain.last().unwrap();
        let step = graph.edge_ids().find(|e| {
            let [a, b] = graph.edge(*e).unwrap();
            !used.contains(e)
                && ((a == current && component.contains(b) && !chain.contains(&b))
                    || (b == current && component.contains(a) && !chain.contains(&a)))
        });
        let Some(e) = step else {
            return Err(Error::Internal("rational chain is not a path".into()));
        };
        let [a, b] = graph.edge(e).unwrap();
        used.push(e);
        chain.push(if a == current { b } else { a });
    }

    let len = chain.len();
    Ok(RationalBridge {
        chain,
        attached_tails: vec![Vec::new(); len],
        attaching_edges: [first_edge, last_edge],
        endpoints: [first_outside, last_outside],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ids(g: &MarkedDualGraph, s: VertexSet) -> Vec<&str> {
        let mut v: Vec<&str> = s.iter().map(|i| g.id(i)).collect();
        v.sort();
        v
    }

    #[test]
    fn stable_graph_is_all_core() {
        let g = fixtures::g2();
        let c = classify(&g).unwrap();
        assert!(c.tails.is_empty() && c.bridges.is_empty());
        assert_eq!(ids(&g, c.core), vec!["A", "B"]);
        assert!(c.exceptional.is_empty());
    }

    #[test]
    fn exceptional_bridge() {
        let g = fixtures::g3();
        let c = classify(&g).unwrap();
        assert_eq!(c.bridges.len(), 1);
        assert_eq!(c.bridges[0].chain, vec![g.index_of("E").unwrap()]);
        assert_eq!(ids(&g, c.core), vec!["A", "B"]);
        assert_eq!(ids(&g, c.exceptional), vec!["E"]);
        assert_eq!(c.bridges[0].attaching_edges, [EdgeId(0), EdgeId(1)]);
    }

    #[test]
    fn rational_tail() {
        let g = fixtures::g4();
        let c = classify(&g).unwrap();
        assert_eq!(c.tails.len(), 1);
        assert_eq!(ids(&g, c.tails[0].vertices), vec!["E"]);
        assert_eq!(ids(&g, c.core), vec!["v0"]);
        assert!(c.destabilizing.is_empty());
    }

    #[test]
    fn tails_on_bridge_are_recorded_in_the_bridge() {
        // A(2) – E – B(1), A – B, tail T(legs 1,2) on E, tail chain U – W on A.
        let g = MarkedDualGraph::builder()
            .vertex("A", 2, [])
            .vertex("E", 0, [])
            .vertex("B", 1, [])
            .vertex("T", 0, [1, 2])
            .vertex("U", 0, [3])
            .vertex("W", 0, [4, 5])
            .edge("A", "E")
            .edge("E", "B")
            .edge("A", "B")
            .edge("E", "T")
            .edge("A", "U")
            .edge("U", "W")
            .build()
            .unwrap();
        let c = classify(&g).unwrap();
        assert_eq!(c.tails.len(), 1);
        assert_eq!(ids(&g, c.tails[0].vertices), vec!["U", "W"]);
        assert_eq!(c.bridges.len(), 1);
        let b = &c.bridges[0];
        assert_eq!(b.chain, vec![1]);
        assert_eq!(ids(&g, b.attached_tails[0][0].vertices), vec!["T"]);
        assert_eq!(ids(&g, c.core), vec!["A", "B"]);
        assert!(c.exceptional.is_empty());
        assert_eq!(c.role(3), VertexRole::BridgeTail { bridge: 0, position: 0 });
        assert_eq!(c.role(5), VertexRole::Tail(0));
    }

    #[test]
    fn long_chain_is_ordered_from_the_lower_attaching_edge() {
        let g = fixtures::double_exceptional_bridge();
        let c = classify(&g).unwrap();
        assert_eq!(c.bridges.len(), 1);
        assert_eq!(ids(&g, c.exceptional), vec!["E1", "E2"]);
        assert_eq!(c.bridges[0].chain, vec![1, 2]);
        assert_eq!(c.bridges[0].endpoints, [0, 3]);
    }

    #[test]
    fn bridge_with_both_ends_on_one_vertex() {
        let g = MarkedDualGraph::builder()
            .vertex("A", 3, [])
            .vertex("E", 0, [])
            .edges("A", "E", 2)
            .build()
            .unwrap();
        let c = classify(&g).unwrap();
        assert_eq!(c.bridges.len(), 1);
        assert_eq!(c.bridges[0].endpoints, [0, 0]);
    }

    #[test]
    fn low_genus_is_rejected() {
        let g = fixtures::single(1, &[1]);
        assert!(matches!(classify(&g), Err(Error::GenusTooSmall { .. })));
    }

    #[test]
    fn loops_never_enter_tails_or_bridges() {
        let g = MarkedDualGraph::builder()
            .vertex("A", 2, [])
            .vertex("L", 0, [])
            .edge("A", "L")
            .edge("L", "L")
            .build()
            .unwrap();
        let c = classify(&g).unwrap();
        assert!(c.tails.is_empty() && c.bridges.is_empty());
        assert_eq!(c.core, g.all_vertices());
    }
}
