//! Degree conditions that guarantee vanishing, global generation and
//! normal generation, as predicates on multidegrees.
//!
//! A failed report only means the sufficient condition does not apply.

use crate::balance::{BalanceContext, Multidegree};
use crate::dualgraph::{stability_status, MarkedDualGraph, Subcurve, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriterionWitness {
    pub subcurve: Subcurve,
    pub degree: i64,
    pub threshold: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    /// The first connected subcurve, in canonical order, whose degree is below its threshold.
    pub witness: Option<CriterionWitness>,
}

impl CriterionReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Tests `deg_Z ≥ threshold(Z)` on every connected subcurve, the whole curve included.
fn scan(
    graph: &MarkedDualGraph,
    degrees: &Multidegree,
    threshold: impl Fn(VertexSet) -> i64,
) -> CriterionReport {
    let witness = graph
        .connected_subsets(graph.all_vertices())
        .into_iter()
        .map(|z| CriterionWitness {
            subcurve: z,
            degree: degrees.on(z),
            threshold: threshold(z),
        })
        .find(|w| w.degree < w.threshold);
    CriterionReport { witness }
}

/// Multidegree of `ω^a(Σ_{i ∈ legs} p_i)`.
pub fn omega_twist_multidegree(graph: &MarkedDualGraph, a: i64, legs: &[u32]) -> Multidegree {
    Multidegree::new(
        (0..graph.vertex_count())
            .map(|v| {
                let vx = graph.vertex(v);
                let w = 2 * vx.genus - 2 + graph.valence(v) as i64;
                let marked = vx.legs.iter().filter(|l| legs.contains(l)).count() as i64;
                a * w + marked
            })
            .collect(),
    )
}

fn all_legs(graph: &MarkedDualGraph) -> Vec<u32> {
    (1..=graph.marking_count() as u32).collect()
}

pub fn h1_vanishing(graph: &MarkedDualGraph, mdeg: &Multidegree) -> Result<CriterionReport> {
    graph.ensure_valid()?;
    mdeg.ensure_fits(graph)?;
    Ok(scan(graph, mdeg, |z| 2 * graph.genus_of(z) - 1))
}

pub fn base_point_free_criterion(
    graph: &MarkedDualGraph,
    mdeg: &Multidegree,
) -> Result<CriterionReport> {
    graph.ensure_valid()?;
    mdeg.ensure_fits(graph)?;
    Ok(scan(graph, mdeg, |z| 2 * graph.genus_of(z)))
}

/// `d − g + 1` when every connected subcurve has degree at least `2g − 2`
/// (`g` the genus of the whole curve).
pub fn h0_if_criterion(graph: &MarkedDualGraph, mdeg: &Multidegree) -> Result<Option<i64>> {
    graph.ensure_valid()?;
    mdeg.ensure_fits(graph)?;
    let g = graph.total_genus();
    let report = scan(graph, mdeg, |_| 2 * g - 2);
    Ok(report.holds().then(|| mdeg.total() - g + 1))
}

/// Whether `deg_Z L ≥ 2g` on every connected subcurve, together with the
/// multidegree of `L ⊗ ω(p_1 + … + p_n)`.
pub fn normal_generation_hypothesis(
    graph: &MarkedDualGraph,
    mdeg: &Multidegree,
) -> Result<(CriterionReport, Multidegree)> {
    if !stability_status(graph)?.semistable {
        return Err(Error::NotSemistable);
    }
    mdeg.ensure_fits(graph)?;
    let g = graph.total_genus();
    if g < 2 {
        return Err(Error::GenusTooSmall { genus: g, required: 2 });
    }
    let report = scan(graph, mdeg, |_| 2 * g);
    let omega = omega_twist_multidegree(graph, 1, &all_legs(graph));
    let shifted = Multidegree::new(
        mdeg.degrees()
            .iter()
            .zip(omega.degrees())
            .map(|(a, b)| a + b)
            .collect(),
    );
    Ok((report, shifted))
}

/// Tests `deg_Z M^m ≥ 2 g_Z` for `M = ω(p_1 + … + p_n)`, or without `p_n`
/// when `drop_last` is set.
pub fn dualizing_power_report(
    graph: &MarkedDualGraph,
    m: i64,
    drop_last: bool,
) -> Result<CriterionReport> {
    if m < 2 {
        return Err(Error::Domain(format!("power {m} is below 2")));
    }
    if !stability_status(graph)?.quasistable {
        return Err(Error::NotQuasistable);
    }
    let mut legs = all_legs(graph);
    if drop_last {
        legs.pop();
    }
    let power = omega_twist_multidegree(graph, m, &[]);
    let marked = omega_twist_multidegree(graph, 0, &legs);
    let degrees = Multidegree::new(
        power
            .degrees()
            .iter()
            .zip(marked.degrees())
            .map(|(w, l)| w + m * l)
            .collect(),
    );
    Ok(scan(graph, &degrees, |z| 2 * graph.genus_of(z)))
}

/// Tests `deg_Z M ≥ 2 g_Z` for
/// `M = L(p_1 + … + p_{n−1}) ⊗ ω(p_1 + … + p_{n−1})^{−k}` at the degree of `mdeg`.
pub fn balanced_large_d_report(
    graph: &MarkedDualGraph,
    mdeg: &Multidegree,
    k: i64,
) -> Result<CriterionReport> {
    if k > 1 {
        return Err(Error::Domain(format!("twist exponent {k} is above 1")));
    }
    graph.ensure_valid()?;
    let n = graph.marking_count();
    if n == 0 {
        return Err(Error::Domain("graph has no markings".into()));
    }
    let ctx = BalanceContext::new(graph)?;
    if let Some(v) = ctx.check(mdeg)?.first_violation {
        return Err(Error::NotBalanced(v.describe(graph)));
    }
    let legs: Vec<u32> = (1..n as u32).collect();
    let marked = omega_twist_multidegree(graph, 0, &legs);
    let omega = omega_twist_multidegree(graph, 1, &legs);
    let degrees = Multidegree::new(
        (0..graph.vertex_count())
            .map(|v| mdeg[v] + marked[v] - k * omega[v])
            .collect(),
    );
    Ok(scan(graph, &degrees, |z| 2 * graph.genus_of(z)))
}
