//! Constructive procedures that extract rainbow trees, paths and cycles.
//!
//! Every finder checks its own output: the returned edge set is rainbow and
//! connected, or the finder panics. The exploration processes come in two
//! flavours, see [`Mode`].

mod rbfs;
mod rdfs;
mod sprinkle;
mod subcritical;
mod supercritical;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{edge_set_vertices, is_connected_edge_set, is_rainbow, ColouredGraph, EdgeId, GraphError, Vertex};
use crate::models::ModelError;

pub use rbfs::{rbfs_forest, RbfsParams};
pub use rdfs::{rdfs_longest_path, RdfsParams};
pub use sprinkle::{
    close_cycle_with_window, find_rainbow_cycle_sprinkled, find_rainbow_cycle_weakly_super, sprinkle_close_cycle,
    sprinkle_split, RainbowCycle, SprinkledCycle,
};
pub use subcritical::subcritical_rainbow_tree;
pub use supercritical::{supercritical_rainbow_tree, BranchChoice, PipelineReport};

#[derive(Debug, Error, PartialEq)]
pub enum FinderError {
    #[error("EmptyCore: the giant component has an empty 2-core")]
    EmptyCore,
    #[error("NotFound: no qualifying structure")]
    NotFound,
    #[error("invalid delta {delta}: need 0 < delta < {bound}")]
    InvalidDelta { delta: f64, bound: f64 },
    #[error("invalid epsilon {0}: need 0 < epsilon < 1")]
    InvalidEpsilon(f64),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `Faithful` reproduces the exploration exactly as analysed, including its
/// deliberate waste (query budgets, forbidden vertices, artificial
/// rejections). `Greedy` drops those restrictions and keeps the best
/// structure seen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Faithful,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    TargetReached,
    Exhausted,
    QueryBudget,
    /// The exploration emptied its queue after building a forest above the
    /// size at which the branching-process coupling is abandoned.
    ForestLimit,
}

/// A connected rainbow subgraph given by its vertices and a spanning set of
/// edges.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct RainbowTree {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl RainbowTree {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// Outcome of an exploration process. For RDFS `vertices` is the path in
/// order and `edges[i]` joins `vertices[i]` and `vertices[i + 1]`; for RBFS
/// it is the largest tree found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExplorationTrace {
    pub queries: u64,
    pub accepted: u64,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub stop: StopReason,
}

impl ExplorationTrace {
    /// Number of edges in the result.
    pub fn length(&self) -> usize {
        self.edges.len()
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// Panics unless `edges` is a rainbow tree spanning exactly `vertices`.
pub(crate) fn assert_rainbow_tree(g: &ColouredGraph, vertices: &[Vertex], edges: &[EdgeId]) {
    assert!(is_rainbow(g, edges), "finder produced a non-rainbow edge set");
    assert!(is_connected_edge_set(g, edges), "finder produced a disconnected edge set");
    if edges.is_empty() {
        assert!(vertices.len() <= 1, "finder produced {} vertices without edges", vertices.len());
    } else {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        assert_eq!(vs, edge_set_vertices(g, edges), "finder vertex set does not match its edges");
        assert_eq!(edges.len() + 1, vs.len(), "finder produced a cyclic edge set");
    }
}
