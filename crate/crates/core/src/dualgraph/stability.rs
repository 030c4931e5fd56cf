use crate::dualgraph::{classify, Classification, MarkedDualGraph, Subcurve, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilityStatus {
    pub semistable: bool,
    pub stable: bool,
    pub quasistable: bool,
}

/// Semistable, stable and quasistable flags of a valid graph.
///
/// Quasistability with destabilizing components is only decided in genus ≥ 2,
/// where the tail/bridge decomposition exists; below that a graph with a
/// destabilizing component is reported as not quasistable.
pub fn stability_status(graph: &MarkedDualGraph) -> Result<StabilityStatus> {
    graph.ensure_valid()?;
    let g = graph.total_genus();
    let n = graph.marking_count() as i64;
    let positive = 2 * g - 2 + n > 0;

    let mut min_special = usize::MAX;
    let mut destabilizing = false;
    for v in 0..graph.vertex_count() {
        let vx = graph.vertex(v);
        if vx.genus != 0 {
            continue;
        }
        let special = graph.valence(v) + vx.legs.len();
        min_special = min_special.min(special);
        if special == 2 && !graph.has_loop(v) {
            destabilizing = true;
        }
    }
    let semistable = positive && min_special >= 2;
    let stable = positive && min_special >= 3;

    let quasistable = semistable
        && if !destabilizing {
            true
        } else if g < 2 {
            false
        } else {
            classification_is_quasistable(&classify(graph)?)
        };

    Ok(StabilityStatus {
        semistable,
        stable,
        quasistable,
    })
}

fn classification_is_quasistable(c: &Classification) -> bool {
    c.destabilizing.is_subset(c.exceptional)
        && c.exceptional.is_disjoint(c.tail_vertices())
        && c
            .bridges
            .iter()
            .all(|b| b.chain_set().intersection(c.exceptional).len() <= 1)
}

pub fn is_quasistable(graph: &MarkedDualGraph) -> bool {
    stability_status(graph).is_ok_and(|s| s.quasistable)
}

/// Classification of a graph required to be quasistable of genus at least `min_genus`.
pub fn quasistable_classification(
    graph: &MarkedDualGraph,
    min_genus: i64,
) -> Result<Classification> {
    graph.ensure_valid()?;
    let genus = graph.total_genus();
    if genus < min_genus {
        return Err(Error::GenusTooSmall {
            genus,
            required: min_genus,
        });
    }
    if !stability_status(graph)?.quasistable {
        return Err(Error::NotQuasistable);
    }
    classify(graph)
}

/// Connected subsets of the core that are proper subcurves, in canonical order.
pub fn connected_core_subcurves(
    graph: &MarkedDualGraph,
    classification: &Classification,
) -> Vec<Subcurve> {
    graph.connected_proper_subsets(classification.core)
}

impl Classification {
    pub fn bridge_vertices(&self) -> VertexSet {
        self.bridges
            .iter()
            .fold(VertexSet::EMPTY, |acc, b| acc.union(b.vertices()))
    }
}
