use std::fmt;
use std::str::FromStr;

use crate::balance::{BalanceContext, Multidegree};
use crate::dualgraph::{EdgeId, MarkedDualGraph, Vertex};
use crate::error::{Error, Result};
use crate::morphisms::surgery::Surgery;

/// Where an extra section meets the curve, at the resolution of the dual graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointLocation {
    /// A smooth unmarked point of the named component.
    OnVertex(String),
    AtNode(EdgeId),
    /// The point carrying this existing marking.
    AtMarking(u32),
}

impl fmt::Display for PointLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLocation::OnVertex(id) => write!(f, "vertex:{id}"),
            PointLocation::AtNode(e) => write!(f, "node:{e}"),
            PointLocation::AtMarking(i) => write!(f, "marking:{i}"),
        }
    }
}

/// Parses `vertex:A`, `node:e2` or `marking:1`.
impl FromStr for PointLocation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Malformed(format!("expected kind:reference, got `{s}`")))?;
        match kind {
            "vertex" if !arg.is_empty() => Ok(PointLocation::OnVertex(arg.to_string())),
            "node" => Ok(PointLocation::AtNode(arg.parse()?)),
            "marking" => arg
                .parse()
                .map(PointLocation::AtMarking)
                .map_err(|_| Error::Malformed(format!("bad marking label `{arg}`"))),
            _ => Err(Error::Malformed(format!("unknown location `{s}`"))),
        }
    }
}

impl PointLocation {
    pub fn check(&self, graph: &MarkedDualGraph) -> Result<()> {
        match self {
            PointLocation::OnVertex(id) => graph.require_index(id).map(|_| ()),
            PointLocation::AtNode(e) => graph
                .edge(*e)
                .map(|_| ())
                .ok_or_else(|| Error::Domain(format!("no edge {e}"))),
            PointLocation::AtMarking(i) => graph
                .leg_vertex(*i)
                .map(|_| ())
                .ok_or_else(|| Error::Domain(format!("no marking {i}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionOutcome {
    pub graph: MarkedDualGraph,
    pub mdeg: Multidegree,
    pub delta: PointLocation,
    /// Old vertex index to new vertex index; `None` for the contracted component.
    pub vertex_map: Vec<Option<usize>>,
    pub contracted: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilization {
    pub graph: MarkedDualGraph,
    pub mdeg: Multidegree,
    /// Old vertex index to new vertex index (vertices are only ever appended).
    pub vertex_map: Vec<usize>,
    pub new_vertex: Option<usize>,
}

fn require_balanced<'g>(graph: &'g MarkedDualGraph, mdeg: &Multidegree) -> Result<BalanceContext<'g>> {
    let ctx = BalanceContext::new(graph)?;
    if let Some(v) = ctx.check(mdeg)?.first_violation {
        return Err(Error::NotBalanced(v.describe(graph)));
    }
    Ok(ctx)
}

/// Forgets the highest marking. Its component is contracted when it becomes
/// unstable: a rational tail carrying one other marking, or a rational
/// bridge component of degree 0 with no other marking.
pub fn contract_last_marking(
    graph: &MarkedDualGraph,
    mdeg: &Multidegree,
) -> Result<ContractionOutcome> {
    graph.ensure_valid()?;
    let last = graph.marking_count() as u32;
    if last == 0 {
        return Err(Error::Domain("graph has no marking to forget".into()));
    }
    require_balanced(graph, mdeg)?;

    let v = graph.leg_vertex(last).unwrap();
    let vx = graph.vertex(v);
    let others: Vec<u32> = vx.legs.iter().copied().filter(|&l| l != last).collect();
    let valence = graph.valence(v);
    let contractible = vx.genus == 0 && !graph.has_loop(v) && valence + others.len() <= 2;

    let mut surgery = Surgery::new(graph);
    let (delta, contracted, moved_degree) = match (contractible, valence, others.as_slice()) {
        (true, 1, &[marking]) => {
            if mdeg[v] != -1 {
                return Err(Error::Internal("rational tail without degree -1".into()));
            }
            let e = surgery.incident(v)[0];
            let [a, b] = graph.edges()[e];
            let f = if a == v { b } else { a };
            surgery.vertex_mut(f).legs = {
                let mut legs = graph.vertex(f).legs.clone();
                legs.push(marking);
                legs.sort_unstable();
                legs
            };
            surgery.remove_vertex(v);
            (PointLocation::AtMarking(marking), true, Some(f))
        }
        (true, 2, &[]) if mdeg[v] == 0 => {
            let incident = surgery.incident(v);
            let (keep, drop) = (incident[0], incident[1]);
            let other = |e: usize| {
                let [a, b] = graph.edges()[e];
                if a == v {
                    b
                } else {
                    a
                }
            };
            surgery.edges[keep] = Some([other(keep), other(drop)]);
            surgery.edges[drop] = None;
            surgery.remove_vertex(v);
            (PointLocation::AtNode(EdgeId(keep)), true, None)
        }
        (true, 2, &[]) if mdeg[v] == 1 => {
            surgery.vertex_mut(v).legs.clear();
            (PointLocation::OnVertex(vx.id.clone()), false, None)
        }
        (true, _, _) => {
            return Err(Error::Internal(format!(
                "component {} cannot be contracted with degree {}",
                vx.id, mdeg[v]
            )))
        }
        (false, _, _) => {
            surgery.vertex_mut(v).legs.retain(|&l| l != last);
            (PointLocation::OnVertex(vx.id.clone()), false, None)
        }
    };

    let finished = surgery.finish()?;
    let mut degrees = vec![0; finished.graph.vertex_count()];
    for (old, new) in finished.vertex_map.iter().enumerate() {
        if let Some(new) = new {
            degrees[*new] = mdeg[old];
        }
    }
    if let Some(f) = moved_degree {
        degrees[finished.vertex_map[f].unwrap()] -= 1;
    }
    let delta = match delta {
        PointLocation::AtNode(e) => PointLocation::AtNode(EdgeId(finished.edge_map[e.0].unwrap())),
        other => other,
    };
    Ok(ContractionOutcome {
        graph: finished.graph,
        mdeg: Multidegree::new(degrees),
        delta,
        vertex_map: finished.vertex_map,
        contracted: contracted.then(|| vx.id.clone()),
    })
}

/// Adds marking `n + 1` at `delta`, blowing up a node or a marked point
/// when the new point would land there.
pub fn stabilize(
    graph: &MarkedDualGraph,
    mdeg: &Multidegree,
    delta: &PointLocation,
) -> Result<Stabilization> {
    delta.check(graph)?;
    require_balanced(graph, mdeg)?;
    let next = graph.marking_count() as u32 + 1;
    let mut surgery = Surgery::new(graph);
    let mut degrees = mdeg.degrees().to_vec();
    let new_vertex = match delta {
        PointLocation::OnVertex(id) => {
            let v = graph.require_index(id)?;
            surgery.vertex_mut(v).legs.push(next);
            None
        }
        PointLocation::AtNode(e) => {
            let [a, b] = graph.edges()[e.0];
            let x = surgery.push_vertex(Vertex::new(surgery.fresh_id(&format!("s{next}")), 0, [next]));
            surgery.edges[e.0] = Some([a, x]);
            surgery.push_edge(x, b);
            degrees.push(0);
            Some(x)
        }
        PointLocation::AtMarking(i) => {
            let v = graph.leg_vertex(*i).unwrap();
            let x = surgery.push_vertex(Vertex::new(
                surgery.fresh_id(&format!("s{next}")),
                0,
                [*i, next],
            ));
            surgery.vertex_mut(v).legs.retain(|l| l != i);
            surgery.push_edge(v, x);
            degrees[v] += 1;
            degrees.push(-1);
            Some(x)
        }
    };
    let finished = surgery.finish()?;
    Ok(Stabilization {
        graph: finished.graph,
        mdeg: Multidegree::new(degrees),
        vertex_map: (0..graph.vertex_count()).collect(),
        new_vertex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::is_balanced;
    use crate::dualgraph::stability_status;
    use crate::fixtures;

    fn md(d: &[i64]) -> Multidegree {
        Multidegree::new(d.to_vec())
    }

    #[test]
    fn contract_rational_tail() {
        let g4 = fixtures::g4();
        for d in [-3, 0, 4] {
            let out = contract_last_marking(&g4, &md(&[d + 1, -1])).unwrap();
            let expected = MarkedDualGraph::builder().vertex("v0", 3, [1]).build().unwrap();
            assert_eq!(out.graph, expected);
            assert_eq!(out.mdeg.degrees(), &[d]);
            assert_eq!(out.delta, PointLocation::AtMarking(1));
            assert_eq!(out.contracted.as_deref(), Some("E"));
            assert_eq!(out.vertex_map, vec![Some(0), None]);
        }
    }

    #[test]
    fn contract_bridge_component() {
        let g = fixtures::g3_marked();
        let out = contract_last_marking(&g, &md(&[0, 0, 1])).unwrap();
        let map: Vec<Option<usize>> = vec![Some(0), Some(1)];
        assert!(out.graph.matches_under(&fixtures::g2(), &map));
        assert_eq!(out.mdeg.degrees(), &[0, 1]);
        assert_eq!(out.delta, PointLocation::AtNode(EdgeId(0)));
    }

    #[test]
    fn contract_without_contraction() {
        let g = fixtures::single(3, &[1, 2]);
        let out = contract_last_marking(&g, &md(&[5])).unwrap();
        assert_eq!(out.graph, fixtures::single(3, &[1]));
        assert_eq!(out.delta, PointLocation::OnVertex("A".into()));
        assert!(out.contracted.is_none());

        // A marked bridge component of degree 1 stays, becoming exceptional.
        let g = fixtures::g3_marked();
        let out = contract_last_marking(&g, &md(&[0, 1, 0])).unwrap();
        assert_eq!(out.graph, fixtures::g3());
        assert_eq!(out.delta, PointLocation::OnVertex("E".into()));
    }

    #[test]
    fn contraction_requires_balance() {
        let g4 = fixtures::g4();
        assert!(matches!(
            contract_last_marking(&g4, &md(&[0, 0])),
            Err(Error::NotBalanced(_))
        ));
        assert!(contract_last_marking(&fixtures::g2(), &md(&[0, 0])).is_err());
    }

    #[test]
    fn stabilize_at_node() {
        let s = stabilize(&fixtures::g2(), &md(&[0, 0]), &PointLocation::AtNode(EdgeId(0))).unwrap();
        let map = [Some(0), Some(2), Some(1)];
        assert!(s.graph.matches_under(&fixtures::g3_marked(), &map));
        assert_eq!(s.mdeg.degrees(), &[0, 0, 0]);
        assert!(stability_status(&s.graph).unwrap().quasistable);
        assert!(is_balanced(&s.graph, &s.mdeg).unwrap().verdict());
    }

    #[test]
    fn stabilize_at_marking() {
        let g = fixtures::single(3, &[1]);
        let s = stabilize(&g, &md(&[2]), &PointLocation::AtMarking(1)).unwrap();
        assert_eq!(s.graph.vertex(0).legs, Vec::<u32>::new());
        assert_eq!(s.graph.vertex(1).legs, vec![1, 2]);
        assert_eq!(s.mdeg.degrees(), &[3, -1]);
        assert!(is_balanced(&s.graph, &s.mdeg).unwrap().verdict());
    }

    #[test]
    fn stabilize_on_vertex() {
        let g = fixtures::g2();
        let s = stabilize(&g, &md(&[1, -1]), &"vertex:B".parse().unwrap()).unwrap();
        assert_eq!(s.graph.vertex(1).legs, vec![1]);
        assert_eq!(s.mdeg.degrees(), &[1, -1]);
        assert!(s.new_vertex.is_none());
    }

    #[test]
    fn bad_locations() {
        let g = fixtures::g2();
        let m = md(&[0, 0]);
        for loc in ["vertex:Z", "node:e3", "marking:1"] {
            let loc: PointLocation = loc.parse().unwrap();
            assert!(matches!(stabilize(&g, &m, &loc), Err(Error::Domain(_))));
        }
        assert!("edge:1".parse::<PointLocation>().is_err());
        assert!("node:x".parse::<PointLocation>().is_err());
    }

    #[test]
    fn locations_round_trip_through_text() {
        for loc in [
            PointLocation::OnVertex("A".into()),
            PointLocation::AtNode(EdgeId(1)),
            PointLocation::AtMarking(3),
        ] {
            assert_eq!(loc.to_string().parse::<PointLocation>().unwrap(), loc);
        }
    }
}
