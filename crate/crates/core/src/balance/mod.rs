//! Multidegrees and the balancing condition on quasistable pointed curves.

mod balanced;
mod bounds;
mod gieseker;
mod multidegree;
mod search;
mod twist;

pub use balanced::{
    enumerate_balanced, forced_tail_bridge_degrees, is_balanced, BalanceContext, BalanceReport,
    BalanceViolation, BridgeAssignment, BridgeChoice, ConstraintKind, ForcedDegrees,
};
pub use bounds::{degree_bounds, DegreeBounds};
pub use gieseker::{enumerate_gieseker_balanced, is_gieseker_balanced};
pub use multidegree::{sort_by_id, Multidegree};
pub use twist::{dm_condition, dm_gcd, stack_dimension, twist_by_omega};
