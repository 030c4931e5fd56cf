use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::balance::Multidegree;
use crate::dualgraph::{MarkedDualGraph, Vertex};
use crate::error::{Error, Result};

pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub id: String,
    pub genus: i64,
    #[serde(default)]
    pub legs: Vec<u32>,
}

/// On-disk form of a graph, optionally carrying named multidegrees keyed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub version: u32,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub multidegrees: BTreeMap<String, BTreeMap<String, i64>>,
}

impl GraphDocument {
    pub fn from_graph(graph: &MarkedDualGraph) -> Self {
        GraphDocument {
            version: DOCUMENT_VERSION,
            vertices: graph
                .vertices()
                .iter()
                .map(|v| VertexRecord {
                    id: v.id.clone(),
                    genus: v.genus,
                    legs: v.legs.clone(),
                })
                .collect(),
            edges: graph
                .edges()
                .iter()
                .map(|&[a, b]| [graph.id(a).to_string(), graph.id(b).to_string()])
                .collect(),
            multidegrees: BTreeMap::new(),
        }
    }

    pub fn with_multidegree(
        mut self,
        graph: &MarkedDualGraph,
        name: impl Into<String>,
        mdeg: &Multidegree,
    ) -> Self {
        self.multidegrees.insert(name.into(), mdeg.to_map(graph));
        self
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        if doc.version != DOCUMENT_VERSION {
            return Err(Error::Malformed(format!(
                "document version {} is not supported (expected {DOCUMENT_VERSION})",
                doc.version
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }

    pub fn graph(&self) -> Result<MarkedDualGraph> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex::new(v.id.clone(), v.genus, v.legs.iter().copied()))
            .collect();
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|[a, b]| (a.as_str(), b.as_str()))
            .collect();
        MarkedDualGraph::from_ids(vertices, &edges)
    }

    pub fn multidegree(&self, graph: &MarkedDualGraph, name: &str) -> Result<Multidegree> {
        let map = self
            .multidegrees
            .get(name)
            .ok_or_else(|| Error::Malformed(format!("document has no multidegree `{name}`")))?;
        Multidegree::from_map(graph, map)
    }
}
