use crate::dualgraph::{MarkedDualGraph, VertexSet};
use crate::error::{Error, Result};

/// A subcurve is a non-empty set of components.
pub type Subcurve = VertexSet;

/// Numerical invariants of a subcurve `Z`: arithmetic genus `g_Z`, number
/// `k_Z` of nodes joining `Z` to its complement, and `w_Z = 2 g_Z − 2 + k_Z`,
/// the degree of the dualizing sheaf on `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubcurveInvariants {
    pub genus: i64,
    pub boundary: i64,
    pub omega_degree: i64,
    pub connected: bool,
}

impl MarkedDualGraph {
    /// `k_Z`: edges with exactly one endpoint in `z`.
    pub fn boundary_size(&self, z: VertexSet) -> i64 {
        self.edges()
            .iter()
            .filter(|e| z.contains(e[0]) != z.contains(e[1]))
            .count() as i64
    }

    /// Edges with both endpoints in `z`, loops included.
    pub fn internal_edge_count(&self, z: VertexSet) -> i64 {
        self.edges()
            .iter()
            .filter(|e| z.contains(e[0]) && z.contains(e[1]))
            .count() as i64
    }

    /// Arithmetic genus `Σ_{v∈Z} genus(v) + #internal edges − |Z| + 1`.
    pub fn genus_of(&self, z: VertexSet) -> i64 {
        let sum: i64 = z.iter().map(|v| self.vertex(v).genus).sum();
        sum + self.internal_edge_count(z) - z.len() as i64 + 1
    }

    pub fn omega_degree_of(&self, z: VertexSet) -> i64 {
        2 * self.genus_of(z) - 2 + self.boundary_size(z)
    }

    pub fn is_connected_set(&self, z: VertexSet) -> bool {
        !z.is_empty() && self.components_within(z) == 1
    }

    pub fn is_proper(&self, z: VertexSet) -> bool {
        !z.is_empty() && z != self.all_vertices()
    }

    /// Every non-empty connected subset of `allowed`, each exactly once,
    /// sorted by size and then lexicographically by member indices.
    pub fn connected_subsets(&self, allowed: VertexSet) -> Vec<VertexSet> {
        let adjacency = self.adjacency();
        let mut out = Vec::new();
        for v in allowed {
            let lower = VertexSet::from_bits((1u64 << v) - 1).with(v);
            let candidates = adjacency[v].intersection(allowed).difference(lower);
            grow(
                &adjacency,
                allowed,
                VertexSet::singleton(v),
                candidates,
                lower,
                &mut out,
            );
        }
        out.sort_by(VertexSet::canonical_cmp);
        out
    }

    /// Connected proper subcurves contained in `allowed`.
    pub fn connected_proper_subsets(&self, allowed: VertexSet) -> Vec<VertexSet> {
        let full = self.all_vertices();
        let mut subsets = self.connected_subsets(allowed);
        subsets.retain(|&z| z != full);
        subsets
    }
}

// `candidates` is always N(current) \ current \ forbidden; branching on the
// lowest candidate and forbidding it for later siblings yields each
// connected superset exactly once.
fn grow(
    adjacency: &[VertexSet],
    allowed: VertexSet,
    current: VertexSet,
    candidates: VertexSet,
    forbidden: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    out.push(current);
    let mut candidates = candidates;
    let mut forbidden = forbidden;
    while let Some(w) = candidates.first() {
        candidates.remove(w);
        let next = current.with(w);
        let next_candidates = candidates
            .union(adjacency[w].intersection(allowed))
            .difference(next)
            .difference(forbidden);
        grow(adjacency, allowed, next, next_candidates, forbidden, out);
        forbidden.insert(w);
    }
}

/// `(g_Z, k_Z, w_Z, connected)` for a proper non-empty subcurve.
pub fn subcurve_invariants(graph: &MarkedDualGraph, z: Subcurve) -> Result<SubcurveInvariants> {
    if z.is_empty() {
        return Err(Error::Domain("subcurve is empty".into()));
    }
    if !z.is_subset(graph.all_vertices()) {
        return Err(Error::Domain("subcurve references unknown vertices".into()));
    }
    if z == graph.all_vertices() {
        return Err(Error::Domain(
            "subcurve is the whole graph; k_Z is only defined for proper subcurves".into(),
        ));
    }
    let genus = graph.genus_of(z);
    let boundary = graph.boundary_size(z);
    Ok(SubcurveInvariants {
        genus,
        boundary,
        omega_degree: 2 * genus - 2 + boundary,
        connected: graph.is_connected_set(z),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &MarkedDualGraph, ids: &[&str]) -> VertexSet {
        ids.iter().map(|id| g.index_of(id).unwrap()).collect()
    }

    #[test]
    fn invariants_on_fixtures() {
        let g2 = fixtures::g2();
        let a = subcurve_invariants(&g2, set(&g2, &["A"])).unwrap();
        assert_eq!((a.genus, a.boundary, a.omega_degree, a.connected), (1, 2, 2, true));
        let b = subcurve_invariants(&g2, set(&g2, &["B"])).unwrap();
        assert_eq!(a.omega_degree + b.omega_degree, 2 * g2.total_genus() - 2);

        let g4 = fixtures::g4();
        let e = subcurve_invariants(&g4, set(&g4, &["E"])).unwrap();
        assert_eq!((e.genus, e.boundary, e.omega_degree, e.connected), (0, 1, -1, true));
    }

    #[test]
    fn invariants_reject_empty_and_full() {
        let g2 = fixtures::g2();
        assert!(subcurve_invariants(&g2, VertexSet::EMPTY).is_err());
        assert!(subcurve_invariants(&g2, g2.all_vertices()).is_err());
    }

    #[test]
    fn disconnected_subcurve_is_flagged() {
        let g3 = fixtures::g3();
        let z = set(&g3, &["A"]).union(set(&g3, &["E"]));
        assert!(subcurve_invariants(&g3, z).unwrap().connected);
        // Path A - E - B - C: {A, B} skips E.
        let path = MarkedDualGraph::builder()
            .vertex("A", 1, [])
            .vertex("E", 0, [])
            .vertex("B", 1, [])
            .edge("A", "E")
            .edge("E", "B")
            .build()
            .unwrap();
        let inv = subcurve_invariants(&path, set(&path, &["A", "B"])).unwrap();
        assert!(!inv.connected);
        assert_eq!(inv.genus, 1);
    }

    #[test]
    fn connected_subsets_match_brute_force() {
        let g = MarkedDualGraph::builder()
            .vertex("a", 0, [])
            .vertex("b", 1, [])
            .vertex("c", 0, [])
            .vertex("d", 2, [])
            .vertex("e", 0, [])
            .edge("a", "b")
            .edge("b", "c")
            .edge("c", "d")
            .edge("d", "a")
            .edge("d", "e")
            .edge("e", "e")
            .build()
            .unwrap();
        let allowed = g.all_vertices();
        let fast = g.connected_subsets(allowed);
        let mut brute: Vec<VertexSet> = (1u64..1 << 5)
            .map(VertexSet::from_bits)
            .filter(|&z| g.is_connected_set(z))
            .collect();
        brute.sort_by(VertexSet::canonical_cmp);
        assert_eq!(fast, brute);

        let restricted = set(&g, &["a", "c", "d"]);
        let sub = g.connected_subsets(restricted);
        assert!(sub.iter().all(|z| z.is_subset(restricted)));
        assert_eq!(sub.len(), 6); // a, c, d, ad, cd, acd
    }
}
