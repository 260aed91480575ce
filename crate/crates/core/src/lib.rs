//! Random coloured graphs and the rainbow structures inside them.
//!
//! The crate covers four layers:
//!
//! * [`graph`]: coloured multigraphs, components, the 2-core and the forest
//!   hanging off it, rooted forests and bridge numbers.
//! * [`models`]: samplers for `G(n, p)`, uniform colourings, the configuration
//!   model and uniform rooted forests, plus branching-process survival
//!   probabilities.
//! * [`finders`]: procedures that extract large rainbow trees, paths and
//!   cycles from a coloured graph.
//! * [`experiments`]: a seeded, parallel Monte Carlo harness that checks the
//!   samplers and finders against their predicted scaling laws.
//!
//! [`oracles`] holds brute-force counterparts for small instances, and
//! [`cli`] backs the `rainbow` binary.

pub mod cli;
pub mod experiments;
pub mod finders;
pub mod graph;
pub mod models;
pub mod oracles;
pub mod rng;

pub use graph::{ColouredGraph, Edge, EdgeId, RootedForest, Vertex};
pub use rng::{RngStream, SimRng};
