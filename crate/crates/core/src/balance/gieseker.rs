use crate::balance::bounds::ScaledBounds;
use crate::balance::multidegree::{sort_by_id, Multidegree};
use crate::balance::search::{self, Constraint};
use crate::dualgraph::{quasistable_classification, Classification, MarkedDualGraph};
use crate::error::{Error, Result};

fn unpointed_classification(graph: &MarkedDualGraph) -> Result<Classification> {
    graph.ensure_valid()?;
    if graph.marking_count() > 0 {
        return Err(Error::Domain(
            "the basic inequality applies to graphs without markings".into(),
        ));
    }
    quasistable_classification(graph, 2)
}

fn basic_constraints(graph: &MarkedDualGraph, d: i64) -> Vec<Constraint> {
    let g = graph.total_genus();
    graph
        .connected_proper_subsets(graph.all_vertices())
        .into_iter()
        .map(|set| Constraint {
            set,
            bounds: ScaledBounds::basic(g, d, graph.omega_degree_of(set), graph.boundary_size(set)),
        })
        .collect()
}

/// Degree 1 on exceptional components and
/// `d·w_Z/(2g−2) − k_Z/2 ≤ deg_Z ≤ d·w_Z/(2g−2) + k_Z/2` on every connected proper subcurve.
pub fn is_gieseker_balanced(graph: &MarkedDualGraph, mdeg: &Multidegree) -> Result<bool> {
    let c = unpointed_classification(graph)?;
    mdeg.ensure_fits(graph)?;
    if c.exceptional.iter().any(|v| mdeg[v] != 1) {
        return Ok(false);
    }
    Ok(basic_constraints(graph, mdeg.total())
        .iter()
        .all(|c| c.bounds.admits(mdeg.on(c.set))))
}

pub fn enumerate_gieseker_balanced(graph: &MarkedDualGraph, d: i64) -> Result<Vec<Multidegree>> {
    let c = unpointed_classification(graph)?;
    let mut base = vec![0; graph.vertex_count()];
    for v in c.exceptional {
        base[v] = 1;
    }
    let free: Vec<usize> = graph.all_vertices().difference(c.exceptional).iter().collect();
    let mut raw = Vec::new();
    search::solve(&base, &free, &basic_constraints(graph, d), d, &mut raw)?;
    let mut out: Vec<Multidegree> = raw.into_iter().map(Multidegree::new).collect();
    sort_by_id(graph, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn basic_inequality_examples() {
        let g2 = fixtures::g2();
        assert!(is_gieseker_balanced(&g2, &Multidegree::new(vec![0, 0])).unwrap());
        assert!(!is_gieseker_balanced(&g2, &Multidegree::new(vec![2, -2])).unwrap());
        let g3 = fixtures::g3();
        assert!(is_gieseker_balanced(&g3, &Multidegree::new(vec![0, 1, 0])).unwrap());
        assert!(!is_gieseker_balanced(&g3, &Multidegree::new(vec![1, 0, 0])).unwrap());
    }

    #[test]
    fn markings_are_rejected() {
        let g = fixtures::g4();
        assert!(is_gieseker_balanced(&g, &Multidegree::new(vec![1, -1])).is_err());
        assert!(enumerate_gieseker_balanced(&g, 0).is_err());
    }

    #[test]
    fn enumeration_matches_checks() {
        let g2 = fixtures::g2();
        let list = enumerate_gieseker_balanced(&g2, 0).unwrap();
        let degs: Vec<&[i64]> = list.iter().map(|m| m.degrees()).collect();
        assert_eq!(degs, vec![&[-1, 1][..], &[0, 0], &[1, -1]]);
        let g3 = fixtures::g3();
        let list = enumerate_gieseker_balanced(&g3, 1).unwrap();
        assert_eq!(list, vec![Multidegree::new(vec![0, 1, 0])]);
    }

    #[test]
    fn genus_two_is_allowed() {
        let g = MarkedDualGraph::builder()
            .vertex("A", 1, [])
            .vertex("B", 1, [])
            .edge("A", "B")
            .build()
            .unwrap();
        // w = 1 on each side, k = 1: bounds d/2 ± 1/2.
        let list = enumerate_gieseker_balanced(&g, 1).unwrap();
        assert_eq!(list.len(), 2);
    }
}
