//! Approximation algorithms for weighted vertex deletion into chordal,
//! distance-hereditary and small-minor-free graphs, with LP certificates.
//!
//! All weights and fractional values are exact rationals ([`Q`]). Solvers
//! return a [`cert::Certificate`] binding the solution weight to the LP lower
//! bound it was measured against.

pub mod cert;
pub mod chordal;
pub mod config;
pub mod cvd;
pub mod dh;
pub mod dhvd;
pub mod error;
pub mod exact;
pub mod graph;
pub mod harness;
pub mod io;
pub mod lp;
pub mod minor;
pub mod multicut;
pub mod pmfd;
pub mod rational;
pub mod separators;

pub use error::{Error, Result};
pub use graph::{Graph, Subgraph, VertexSet};
pub use rational::Q;
