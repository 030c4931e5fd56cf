//! Marked dual graphs of pointed nodal curves, their subcurves, and the
//! tail/bridge/core decomposition behind (quasi)stability.

mod blowup;
mod classify;
mod graph;
mod stability;
mod subcurve;
mod vertex_set;

pub use blowup::{blow_up_edges, BlowUp};
pub use classify::{classify, Classification, RationalBridge, RationalTail, VertexRole};
pub use graph::{EdgeId, GraphBuilder, MarkedDualGraph, Vertex, Violation, MAX_VERTICES};
pub use stability::{
    connected_core_subcurves, is_quasistable, quasistable_classification, stability_status,
    StabilityStatus,
};
pub use subcurve::{subcurve_invariants, Subcurve, SubcurveInvariants};
pub use vertex_set::{VertexSet, VertexSetIter};
