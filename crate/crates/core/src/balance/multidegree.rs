use std::collections::BTreeMap;
use std::ops::{Index, IndexMut};

use crate::dualgraph::{MarkedDualGraph, VertexSet};
use crate::error::{Error, Result};

/// One integer degree per component, indexed like the graph's vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(Vec<i64>);

impl Multidegree {
    pub fn new(degrees: Vec<i64>) -> Self {
        Multidegree(degrees)
    }

    pub fn zeros(len: usize) -> Self {
        Multidegree(vec![0; len])
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `deg_Z`, the sum over the components of `z`.
    pub fn on(&self, z: VertexSet) -> i64 {
        z.iter().map(|v| self.0[v]).sum()
    }

    pub fn ensure_fits(&self, graph: &MarkedDualGraph) -> Result<()> {
        if self.0.len() == graph.vertex_count() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "multidegree has {} entries for a graph with {} vertices",
                self.0.len(),
                graph.vertex_count()
            )))
        }
    }

    /// Builds from an id-keyed map whose keys must be exactly the graph's vertex ids.
    pub fn from_map(graph: &MarkedDualGraph, map: &BTreeMap<String, i64>) -> Result<Self> {
        if let Some(unknown) = map.keys().find(|id| graph.index_of(id).is_none()) {
            return Err(Error::Malformed(format!(
                "multidegree names unknown vertex `{unknown}`"
            )));
        }
        let degrees = graph
            .vertices()
            .iter()
            .map(|v| {
                map.get(&v.id).copied().ok_or_else(|| {
                    Error::Malformed(format!("multidegree is missing vertex `{}`", v.id))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Multidegree(degrees))
    }

    pub fn to_map(&self, graph: &MarkedDualGraph) -> BTreeMap<String, i64> {
        graph
            .vertices()
            .iter()
            .zip(&self.0)
            .map(|(v, &d)| (v.id.clone(), d))
            .collect()
    }

    /// Parses `A=0,B=-1`. Every vertex must be named exactly once.
    pub fn parse(graph: &MarkedDualGraph, text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for pair in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (id, deg) = pair
                .split_once('=')
                .ok_or_else(|| Error::Malformed(format!("expected `id=degree`, got `{pair}`")))?;
            let deg: i64 = deg
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("bad degree in `{pair}`")))?;
            if map.insert(id.trim().to_string(), deg).is_some() {
                return Err(Error::Malformed(format!("vertex `{}` given twice", id.trim())));
            }
        }
        Self::from_map(graph, &map)
    }

    /// `A=0,E=1,B=0`, in vertex order.
    pub fn render(&self, graph: &MarkedDualGraph) -> String {
        graph
            .vertices()
            .iter()
            .zip(&self.0)
            .map(|(v, d)| format!("{}={}", v.id, d))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Degrees listed in order of vertex id; the key for sorted output.
    pub fn id_ordered(&self, graph: &MarkedDualGraph) -> Vec<i64> {
        graph.id_order().into_iter().map(|v| self.0[v]).collect()
    }
}

impl Index<usize> for Multidegree {
    type Output = i64;

    fn index(&self, v: usize) -> &i64 {
        &self.0[v]
    }
}

impl IndexMut<usize> for Multidegree {
    fn index_mut(&mut self, v: usize) -> &mut i64 {
        &mut self.0[v]
    }
}

impl From<Vec<i64>> for Multidegree {
    fn from(degrees: Vec<i64>) -> Self {
        Multidegree(degrees)
    }
}

/// Sorts multidegrees by their degrees read in vertex-id order.
pub fn sort_by_id(graph: &MarkedDualGraph, list: &mut [Multidegree]) {
    let order = graph.id_order();
    list.sort_by(|a, b| {
        order
            .iter()
            .map(|&v| a[v])
            .cmp(order.iter().map(|&v| b[v]))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_and_render_round_trip() {
        let g = fixtures::g3();
        let m = Multidegree::parse(&g, "B=0, A=0,E=1").unwrap();
        assert_eq!(m.degrees(), &[0, 1, 0]);
        assert_eq!(m.render(&g), "A=0,E=1,B=0");
        assert_eq!(Multidegree::parse(&g, &m.render(&g)).unwrap(), m);
        assert_eq!(m.id_ordered(&g), vec![0, 0, 1]);
    }

    #[test]
    fn parse_rejects_partial_or_unknown() {
        let g = fixtures::g2();
        assert!(Multidegree::parse(&g, "A=0").unwrap_err().is_malformed());
        assert!(Multidegree::parse(&g, "A=0,B=0,C=1").unwrap_err().is_malformed());
        assert!(Multidegree::parse(&g, "A=0,B=x").unwrap_err().is_malformed());
        assert!(Multidegree::parse(&g, "A=0,A=1,B=0").unwrap_err().is_malformed());
    }

    #[test]
    fn totals_and_subcurve_degrees() {
        let m = Multidegree::new(vec![3, -1, 2]);
        assert_eq!(m.total(), 4);
        assert_eq!(m.on(VertexSet::singleton(0).with(1)), 2);
    }
}
