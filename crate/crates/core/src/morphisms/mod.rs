//! Moving between `n` and `n + 1` markings, down to stable models, and down
//! to unpointed curves.

mod contraction;
mod model;
mod surgery;

pub use contraction::{
    contract_last_marking, stabilize, ContractionOutcome, PointLocation, Stabilization,
};
pub use model::{
    bridge_assignments, forgetful_fiber, lift_multidegree, stable_model, strip_to_unpointed,
    FiberEntry, Reduction, MAX_CENSUS_EDGES,
};
