use crate::balance::{
    enumerate_balanced, is_gieseker_balanced, BalanceContext, BridgeAssignment, Multidegree,
};
use crate::dualgraph::{
    blow_up_edges, quasistable_classification, stability_status, Classification, EdgeId,
    MarkedDualGraph, VertexSet,
};
use crate::error::{Error, Result};
use crate::morphisms::surgery::Surgery;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: MarkedDualGraph,
    /// Old vertex index to new vertex index; `None` for removed components.
    pub vertex_map: Vec<Option<usize>>,
}

/// Contracts destabilizing components until the graph is stable: a genus 0
/// component meeting the rest twice without markings is replaced by a single
/// node (a loop if both sides are the same component), and one meeting the
/// rest once with a single marking passes that marking to its neighbour.
pub fn stable_model(graph: &MarkedDualGraph) -> Result<Reduction> {
    if !stability_status(graph)?.semistable {
        return Err(Error::NotSemistable);
    }
    let mut surgery = Surgery::new(graph);
    while let Some(v) = next_destabilizing(&surgery) {
        let incident = surgery.incident(v);
        let other = |s: &Surgery, e: usize| {
            let [a, b] = s.edges[e].unwrap();
            if a == v {
                b
            } else {
                a
            }
        };
        if let [keep, drop] = incident[..] {
            let ends = [other(&surgery, keep), other(&surgery, drop)];
            surgery.edges[keep] = Some(ends);
            surgery.edges[drop] = None;
        } else {
            let f = other(&surgery, incident[0]);
            let legs = std::mem::take(&mut surgery.vertex_mut(v).legs);
            let target = surgery.vertex_mut(f);
            target.legs.extend(legs);
            target.legs.sort_unstable();
        }
        surgery.remove_vertex(v);
    }
    let finished = surgery.finish()?;
    Ok(Reduction {
        graph: finished.graph,
        vertex_map: finished.vertex_map,
    })
}

fn next_destabilizing(s: &Surgery) -> Option<usize> {
    (0..s.vertices.len()).find(|&v| {
        let Some(vx) = &s.vertices[v] else {
            return false;
        };
        if vx.genus != 0 {
            return false;
        }
        let incident = s.incident(v);
        let looped = incident
            .iter()
            .any(|&e| s.edges[e].is_some_and(|[a, b]| a == b));
        !looped && incident.len() + vx.legs.len() == 2 && !incident.is_empty()
    })
}

/// Removes every rational tail, shrinks each bridge to a node (assignment
/// `None`) or to its chosen chain component, and forgets all markings.
pub fn strip_to_unpointed(
    graph: &MarkedDualGraph,
    assignment: &[Option<usize>],
) -> Result<Reduction> {
    let ctx = BalanceContext::new(graph)?;
    ctx.forced().check_assignment(assignment)?;
    let c = ctx.classification();
    let mut surgery = Surgery::new(graph);
    for tail in c.all_tails() {
        for v in tail.vertices {
            surgery.remove_vertex(v);
        }
    }
    for (bridge, choice) in c.bridges.iter().zip(assignment) {
        let [first, last] = bridge.attaching_edges;
        let [left, right] = bridge.endpoints;
        match choice {
            None => {
                surgery.edges[first.0] = Some([left, right]);
                surgery.edges[last.0] = None;
            }
            Some(p) => {
                let kept = bridge.chain[*p];
                surgery.edges[first.0] = Some([left, kept]);
                surgery.edges[last.0] = Some([kept, right]);
            }
        }
        for (pos, &v) in bridge.chain.iter().enumerate() {
            if *choice != Some(pos) {
                surgery.remove_vertex(v);
            }
        }
    }
    for v in surgery.vertices.iter_mut().flatten() {
        v.legs.clear();
    }
    let finished = surgery.finish()?;
    Ok(Reduction {
        graph: finished.graph,
        vertex_map: finished.vertex_map,
    })
}

/// Inverse of stripping on multidegrees: core components get their degree on
/// the stripped graph plus one per rational tail they carry, tails and
/// bridges get their forced degrees under `assignment`.
pub fn lift_multidegree(
    graph: &MarkedDualGraph,
    classification: &Classification,
    assignment: &[Option<usize>],
    mdeg0: &Multidegree,
) -> Result<Multidegree> {
    let stripped = strip_to_unpointed(graph, assignment)?;
    if !is_gieseker_balanced(&stripped.graph, mdeg0)? {
        return Err(Error::NotBalanced(
            "multidegree fails the basic inequality on the stripped graph".into(),
        ));
    }
    let ctx = BalanceContext::new(graph)?;
    let mut out = Multidegree::zeros(graph.vertex_count());
    ctx.forced().apply(assignment, &mut out);
    for v in classification.core {
        let image = stripped.vertex_map[v].expect("core components survive stripping");
        out[v] = mdeg0[image] + classification.tails_meeting(VertexSet::singleton(v));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberEntry {
    pub edges: Vec<EdgeId>,
    pub graph: MarkedDualGraph,
    pub multidegrees: Vec<Multidegree>,
}

/// Largest edge count for which every blow-up subset is tried.
pub const MAX_CENSUS_EDGES: usize = 16;

/// Quasistable blow-ups of a stable graph with their balanced multidegrees of total `d`.
pub fn forgetful_fiber(stable: &MarkedDualGraph, d: i64) -> Result<Vec<FiberEntry>> {
    if !stability_status(stable)?.stable {
        return Err(Error::NotStable);
    }
    quasistable_classification(stable, 3)?;
    let m = stable.edge_count();
    if m > MAX_CENSUS_EDGES {
        return Err(Error::Domain(format!(
            "census over {m} edges is too large (limit {MAX_CENSUS_EDGES})"
        )));
    }
    let mut subsets: Vec<Vec<EdgeId>> = (0u32..1 << m)
        .map(|bits| (0..m).filter(|i| bits >> i & 1 == 1).map(EdgeId).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut out = Vec::new();
    for edges in subsets {
        let blown = blow_up_edges(stable, &edges)?.graph;
        if !stability_status(&blown)?.quasistable {
            continue;
        }
        let multidegrees = enumerate_balanced(&blown, d)?;
        out.push(FiberEntry {
            edges,
            graph: blown,
            multidegrees,
        });
    }
    Ok(out)
}

/// All bridge assignments of a quasistable graph of genus at least 3.
pub fn bridge_assignments(graph: &MarkedDualGraph) -> Result<Vec<BridgeAssignment>> {
    Ok(BalanceContext::new(graph)?.forced().assignments())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::enumerate_gieseker_balanced;
    use crate::dualgraph::classify;
    use crate::fixtures;

    #[test]
    fn stable_models() {
        let g3 = stable_model(&fixtures::g3()).unwrap();
        assert!(g3.graph.matches_under(&fixtures::g2(), &[Some(0), Some(1)]));
        assert_eq!(g3.vertex_map, vec![Some(0), None, Some(1)]);
        assert_eq!(stable_model(&fixtures::g2()).unwrap().graph, fixtures::g2());
        let both = blow_up_edges(&fixtures::g2(), &[EdgeId(0), EdgeId(1)]).unwrap();
        let model = stable_model(&both.graph).unwrap();
        assert!(model.graph.matches_under(&fixtures::g2(), &[Some(0), Some(1)]));
    }

    #[test]
    fn stable_model_of_a_looped_bridge() {
        let g = MarkedDualGraph::builder()
            .vertex("A", 2, [])
            .vertex("E", 0, [])
            .edges("A", "E", 2)
            .build()
            .unwrap();
        let model = stable_model(&g).unwrap();
        assert_eq!(model.graph.edges(), &[[0, 0]]);
        assert_eq!(model.graph.total_genus(), 3);
    }

    #[test]
    fn stable_model_moves_markings_off_unstable_tails() {
        let g = fixtures::destabilizing_tail();
        let model = stable_model(&g).unwrap();
        assert_eq!(model.graph, fixtures::single(3, &[1]));
    }

    #[test]
    fn strip_examples() {
        let g4 = fixtures::g4();
        let s = strip_to_unpointed(&g4, &[]).unwrap();
        assert_eq!(s.graph, MarkedDualGraph::builder().vertex("v0", 3, []).build().unwrap());

        let g3 = fixtures::g3();
        assert_eq!(strip_to_unpointed(&g3, &[Some(0)]).unwrap().graph, g3);
        assert!(strip_to_unpointed(&g3, &[None]).is_err());

        let lb = fixtures::legged_bridge();
        let s = strip_to_unpointed(&lb, &[None]).unwrap();
        assert_eq!(s.graph.vertex_count(), 2);
        assert!(s.graph.matches_under(&fixtures::g2(), &[Some(0), Some(1)]));
        let s = strip_to_unpointed(&lb, &[Some(1)]).unwrap();
        assert!(s.graph.matches_under(&fixtures::g3(), &[Some(0), Some(1), Some(2)]));
        assert_eq!(s.vertex_map, vec![Some(0), None, Some(1), Some(2)]);
    }

    #[test]
    fn lift_examples() {
        let g4 = fixtures::g4();
        let c = classify(&g4).unwrap();
        for d in [-2, 0, 5] {
            let lifted = lift_multidegree(&g4, &c, &[], &Multidegree::new(vec![d])).unwrap();
            assert_eq!(lifted.degrees(), &[d + 1, -1]);
        }

        let g3 = fixtures::g3();
        let c = classify(&g3).unwrap();
        let m = Multidegree::new(vec![0, 1, 0]);
        assert_eq!(lift_multidegree(&g3, &c, &[Some(0)], &m).unwrap(), m);

        let g = fixtures::g2_with_tail();
        let c = classify(&g).unwrap();
        let lifted = lift_multidegree(&g, &c, &[], &Multidegree::new(vec![0, 0])).unwrap();
        assert_eq!(lifted.degrees(), &[1, 0, -1]);
        assert!(lift_multidegree(&g, &c, &[], &Multidegree::new(vec![2, -2])).is_err());
    }

    #[test]
    fn lift_is_a_bijection_on_the_legged_bridge() {
        let g = fixtures::legged_bridge();
        let ctx = BalanceContext::new(&g).unwrap();
        for d in -3..=3 {
            for a in ctx.forced().assignments() {
                let stripped = strip_to_unpointed(&g, &a).unwrap();
                let below = enumerate_gieseker_balanced(&stripped.graph, d).unwrap();
                let mut lifted: Vec<Multidegree> = below
                    .iter()
                    .map(|m| lift_multidegree(&g, ctx.classification(), &a, m).unwrap())
                    .collect();
                crate::balance::sort_by_id(&g, &mut lifted);
                assert_eq!(lifted, ctx.enumerate_with(d, &a).unwrap(), "d={d} a={a:?}");
            }
        }
    }

    #[test]
    fn census_of_g2() {
        let census = forgetful_fiber(&fixtures::g2(), 1).unwrap();
        let counts: Vec<(Vec<EdgeId>, usize)> = census
            .iter()
            .map(|e| (e.edges.clone(), e.multidegrees.len()))
            .collect();
        assert_eq!(
            counts,
            vec![
                (vec![], 2),
                (vec![EdgeId(0)], 1),
                (vec![EdgeId(1)], 1),
                (vec![EdgeId(0), EdgeId(1)], 0)
            ]
        );
        let s = &census[0].multidegrees;
        assert_eq!(s[0].degrees(), &[0, 1]);
        assert_eq!(s[1].degrees(), &[1, 0]);
    }

    #[test]
    fn census_of_smooth_curves() {
        let census = forgetful_fiber(&fixtures::single(3, &[]), 4).unwrap();
        assert_eq!(census.len(), 1);
        assert_eq!(census[0].multidegrees.len(), 1);
        let census = forgetful_fiber(&fixtures::single(3, &[1]), 0).unwrap();
        assert_eq!(census.len(), 1);
        assert!(forgetful_fiber(&fixtures::g3(), 0).is_err());
    }
}
