//! Balanced line bundles on pointed quasistable curves, worked out on their
//! dual graphs.
//!
//! A curve is a [`MarkedDualGraph`]; a line bundle is seen only through its
//! [`Multidegree`]. The [`dualgraph`] module classifies components into core,
//! rational tails and rational bridges; [`balance`] checks and enumerates
//! balanced multidegrees; [`morphisms`] moves between `n` and `n + 1`
//! markings and to stable models; [`cohomology`] turns degree criteria for
//! vanishing and global generation into predicates; [`oracle`] holds slow
//! reference implementations; [`cli`] is the command line front end.

pub mod balance;
pub mod cli;
pub mod cohomology;
pub mod dualgraph;
pub mod error;
pub mod fixtures;
pub mod morphisms;
pub mod oracle;

pub use balance::Multidegree;
pub use dualgraph::{classify, stability_status, EdgeId, MarkedDualGraph, VertexSet};
pub use error::{Error, Result};
