use std::fmt;

use crate::balance::bounds::{DegreeBounds, ScaledBounds};
use crate::balance::multidegree::{sort_by_id, Multidegree};
use crate::balance::search::{self, Constraint};
use crate::dualgraph::{
    quasistable_classification, Classification, MarkedDualGraph, Subcurve, VertexSet,
};
use crate::error::{Error, Result};

/// For each maximal bridge, the chain position whose component takes the
/// larger of its two allowed degrees, or `None` for a degree zero bridge.
pub type BridgeAssignment = Vec<Option<usize>>;

/// Degrees pinned down on tails and bridges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedDegrees {
    /// Every tail component (standalone or hanging off a bridge) with its degree `k_v − 2`.
    pub tail_vertices: Vec<(usize, i64)>,
    pub bridges: Vec<BridgeChoice>,
}

/// Chain components of one bridge with their smaller degree `k_v − 2`; at
/// most one of them may take `k_v − 1` instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeChoice {
    pub chain: Vec<(usize, i64)>,
    /// Position of an exceptional component, which must be the raised one.
    pub forced_raise: Option<usize>,
}

impl BridgeChoice {
    pub fn options(&self) -> Vec<Option<usize>> {
        match self.forced_raise {
            Some(p) => vec![Some(p)],
            None => std::iter::once(None)
                .chain((0..self.chain.len()).map(Some))
                .collect(),
        }
    }
}

impl ForcedDegrees {
    /// Every bridge assignment compatible with the exceptional components.
    pub fn assignments(&self) -> Vec<BridgeAssignment> {
        let mut out: Vec<BridgeAssignment> = vec![Vec::new()];
        for bridge in &self.bridges {
            let options = bridge.options();
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |&o| {
                        let mut next = prefix.clone();
                        next.push(o);
                        next
                    })
                })
                .collect();
        }
        out
    }

    pub fn check_assignment(&self, assignment: &[Option<usize>]) -> Result<()> {
        if assignment.len() != self.bridges.len() {
            return Err(Error::Domain(format!(
                "assignment covers {} bridges, the graph has {}",
                assignment.len(),
                self.bridges.len()
            )));
        }
        for (i, (bridge, choice)) in self.bridges.iter().zip(assignment).enumerate() {
            if let Some(p) = choice {
                if *p >= bridge.chain.len() {
                    return Err(Error::Domain(format!(
                        "bridge {} has no chain position {p}",
                        i + 1
                    )));
                }
            }
            if bridge.forced_raise.is_some() && *choice != bridge.forced_raise {
                return Err(Error::Domain(format!(
                    "bridge {} contains an exceptional component and must carry degree 1 there",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// Writes the tail and bridge degrees for `assignment` into `mdeg`.
    pub fn apply(&self, assignment: &[Option<usize>], mdeg: &mut Multidegree) {
        for &(v, deg) in &self.tail_vertices {
            mdeg[v] = deg;
        }
        for (bridge, choice) in self.bridges.iter().zip(assignment) {
            for (pos, &(v, low)) in bridge.chain.iter().enumerate() {
                mdeg[v] = low + (*choice == Some(pos)) as i64;
            }
        }
    }
}

/// Tail and bridge degrees forced on a quasistable graph.
pub fn forced_tail_bridge_degrees(
    graph: &MarkedDualGraph,
    classification: &Classification,
) -> Result<ForcedDegrees> {
    if !crate::dualgraph::is_quasistable(graph) {
        return Err(Error::NotQuasistable);
    }
    Ok(forced_from(graph, classification))
}

fn forced_from(graph: &MarkedDualGraph, c: &Classification) -> ForcedDegrees {
    let k = |v: usize| graph.boundary_size(VertexSet::singleton(v));
    let tail_vertices = c
        .tail_vertices()
        .iter()
        .map(|v| (v, k(v) - 2))
        .collect();
    let bridges = c
        .bridges
        .iter()
        .map(|b| BridgeChoice {
            chain: b.chain.iter().map(|&v| (v, k(v) - 2)).collect(),
            forced_raise: b.chain.iter().position(|&v| c.exceptional.contains(v)),
        })
        .collect();
    ForcedDegrees {
        tail_vertices,
        bridges,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstraintKind {
    ExceptionalDegree,
    TailDegree,
    TailVertexForced,
    BridgePattern,
    CoreInequality,
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstraintKind::ExceptionalDegree => "exceptional-degree",
            ConstraintKind::TailDegree => "tail-degree",
            ConstraintKind::TailVertexForced => "tail-vertex-forced",
            ConstraintKind::BridgePattern => "bridge-pattern",
            ConstraintKind::CoreInequality => "core-inequality",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceViolation {
    pub kind: ConstraintKind,
    pub subcurve: Subcurve,
    pub bounds: DegreeBounds,
    pub degree: i64,
}

impl BalanceViolation {
    pub fn describe(&self, graph: &MarkedDualGraph) -> String {
        let ids: Vec<&str> = self.subcurve.iter().map(|v| graph.id(v)).collect();
        format!(
            "{} on {{{}}}: degree {} outside {}",
            self.kind,
            ids.join(","),
            self.degree,
            self.bounds
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub first_violation: Option<BalanceViolation>,
}

impl BalanceReport {
    pub fn verdict(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Connected proper subcurves made of core components and whole maximal
/// bridges, with at least one core component. A bridge may be needed to
/// connect core components, so core subsets alone are not enough.
fn tested_subcurves(graph: &MarkedDualGraph, c: &Classification) -> Vec<Subcurve> {
    let bridges: Vec<VertexSet> = c.bridges.iter().map(|b| b.vertices()).collect();
    let allowed = bridges.iter().fold(c.core, |acc, b| acc.union(*b));
    graph
        .connected_proper_subsets(allowed)
        .into_iter()
        .filter(|z| !z.intersection(c.core).is_empty())
        .filter(|z| {
            bridges.iter().all(|b| {
                let part = z.intersection(*b);
                part.is_empty() || part == *b
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
struct CoreSubcurve {
    set: VertexSet,
    w: i64,
    k: i64,
    t: i64,
    /// Bridges whose two attaching edges both meet the subcurve.
    bridges_meeting_twice: u64,
}

/// Everything about a quasistable graph that the balancing test needs,
/// computed once so that many multidegrees can be checked cheaply.
#[derive(Clone, Debug)]
pub struct BalanceContext<'g> {
    graph: &'g MarkedDualGraph,
    classification: Classification,
    forced: ForcedDegrees,
    genus: i64,
    subcurves: Vec<CoreSubcurve>,
}

impl<'g> BalanceContext<'g> {
    /// Requires a quasistable graph of genus at least 3.
    pub fn new(graph: &'g MarkedDualGraph) -> Result<Self> {
        let classification = quasistable_classification(graph, 3)?;
        let forced = forced_from(graph, &classification);
        let subcurves = tested_subcurves(graph, &classification)
            .into_iter()
            .map(|set| CoreSubcurve {
                set,
                w: graph.omega_degree_of(set),
                k: graph.boundary_size(set),
                t: classification.tails_meeting(set),
                bridges_meeting_twice: classification
                    .bridges
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| set.intersection(b.vertices()).is_empty())
                    .filter(|(_, b)| set.contains(b.endpoints[0]) && set.contains(b.endpoints[1]))
                    .fold(0u64, |mask, (i, _)| mask | 1 << i),
            })
            .collect();
        Ok(BalanceContext {
            graph,
            genus: graph.total_genus(),
            classification,
            forced,
            subcurves,
        })
    }

    pub fn graph(&self) -> &'g MarkedDualGraph {
        self.graph
    }

    pub fn classification(&self) -> &Classification {
        &self.classification
    }

    pub fn forced(&self) -> &ForcedDegrees {
        &self.forced
    }

    fn bounds_for(&self, z: &CoreSubcurve, d: i64, zero_bridges: u64) -> ScaledBounds {
        let b = (z.bridges_meeting_twice & zero_bridges).count_ones() as i64;
        ScaledBounds::inequality(self.genus, d, z.w, z.k, z.t, b)
    }

    pub fn check(&self, mdeg: &Multidegree) -> Result<BalanceReport> {
        mdeg.ensure_fits(self.graph)?;
        let violation = self.first_violation(mdeg);
        Ok(BalanceReport {
            first_violation: violation,
        })
    }

    pub fn is_balanced(&self, mdeg: &Multidegree) -> Result<bool> {
        Ok(self.check(mdeg)?.verdict())
    }

    fn first_violation(&self, mdeg: &Multidegree) -> Option<BalanceViolation> {
        let c = &self.classification;
        let violation = |kind, subcurve, bounds, degree| {
            Some(BalanceViolation {
                kind,
                subcurve,
                bounds,
                degree,
            })
        };

        if let Some(v) = c.exceptional.iter().find(|&v| mdeg[v] != 1) {
            return violation(
                ConstraintKind::ExceptionalDegree,
                VertexSet::singleton(v),
                DegreeBounds::exact(1),
                mdeg[v],
            );
        }
        if let Some(t) = c.all_tails().find(|t| mdeg.on(t.vertices) != -1) {
            return violation(
                ConstraintKind::TailDegree,
                t.vertices,
                DegreeBounds::exact(-1),
                mdeg.on(t.vertices),
            );
        }
        if let Some(&(v, f)) = self.forced.tail_vertices.iter().find(|(v, f)| mdeg[*v] != *f) {
            return violation(
                ConstraintKind::TailVertexForced,
                VertexSet::singleton(v),
                DegreeBounds::exact(f),
                mdeg[v],
            );
        }

        let mut zero_bridges = 0u64;
        for (i, (bridge, choice)) in c.bridges.iter().zip(&self.forced.bridges).enumerate() {
            let mut raised = 0;
            for &(v, low) in &choice.chain {
                if mdeg[v] == low + 1 {
                    raised += 1;
                } else if mdeg[v] != low {
                    return violation(
                        ConstraintKind::BridgePattern,
                        VertexSet::singleton(v),
                        DegreeBounds::integers(low, low + 1),
                        mdeg[v],
                    );
                }
            }
            if raised > 1 {
                let all = bridge.vertices();
                return violation(
                    ConstraintKind::BridgePattern,
                    all,
                    DegreeBounds::integers(0, 1),
                    mdeg.on(all),
                );
            }
            if raised == 0 {
                zero_bridges |= 1 << i;
            }
        }

        let d = mdeg.total();
        for z in &self.subcurves {
            let bounds = self.bounds_for(z, d, zero_bridges);
            let deg = mdeg.on(z.set);
            if !bounds.admits(deg) {
                return violation(ConstraintKind::CoreInequality, z.set, bounds.to_bounds(), deg);
            }
        }
        None
    }

    /// Balanced multidegrees of total `d` whose bridges follow `assignment`.
    pub fn enumerate_with(&self, d: i64, assignment: &[Option<usize>]) -> Result<Vec<Multidegree>> {
        self.forced.check_assignment(assignment)?;
        let mut base = Multidegree::zeros(self.graph.vertex_count());
        self.forced.apply(assignment, &mut base);
        let zero_bridges = assignment
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_none())
            .fold(0u64, |mask, (i, _)| mask | 1 << i);
        let constraints: Vec<Constraint> = self
            .subcurves
            .iter()
            .map(|z| Constraint {
                set: z.set,
                bounds: self.bounds_for(z, d, zero_bridges),
            })
            .collect();
        let free: Vec<usize> = self.classification.core.iter().collect();
        let mut raw = Vec::new();
        search::solve(base.degrees(), &free, &constraints, d, &mut raw)?;
        let mut out: Vec<Multidegree> = raw.into_iter().map(Multidegree::new).collect();
        sort_by_id(self.graph, &mut out);
        Ok(out)
    }

    pub fn enumerate(&self, d: i64) -> Result<Vec<Multidegree>> {
        let mut out = Vec::new();
        for assignment in self.forced.assignments() {
            out.extend(self.enumerate_with(d, &assignment)?);
        }
        sort_by_id(self.graph, &mut out);
        Ok(out)
    }

    /// The bridge assignment realised by a multidegree that passes the bridge checks.
    pub fn assignment_of(&self, mdeg: &Multidegree) -> BridgeAssignment {
        self.forced
            .bridges
            .iter()
            .map(|b| b.chain.iter().position(|&(v, low)| mdeg[v] == low + 1))
            .collect()
    }
}

pub fn is_balanced(graph: &MarkedDualGraph, mdeg: &Multidegree) -> Result<BalanceReport> {
    BalanceContext::new(graph)?.check(mdeg)
}

pub fn enumerate_balanced(graph: &MarkedDualGraph, d: i64) -> Result<Vec<Multidegree>> {
    BalanceContext::new(graph)?.enumerate(d)
}
