use std::collections::VecDeque;

use rand::Rng;

use super::{assert_rainbow_tree, ExplorationTrace, FinderError, Mode, StopReason};
use crate::graph::{ColouredGraph, EdgeId, Vertex};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RbfsParams {
    pub mode: Mode,
    pub delta: f64,
    /// Distance above criticality, `p = (1 + epsilon) / n`; sets the
    /// stopping thresholds of the faithful run.
    pub epsilon: f64,
}

impl RbfsParams {
    /// The slack used in the analysis, `delta = alpha / (alpha + 1) eps - eps^2`.
    pub fn for_epsilon(mode: Mode, alpha: f64, epsilon: f64) -> Self {
        RbfsParams { mode, delta: alpha / (alpha + 1.0) * epsilon - epsilon * epsilon, epsilon }
    }
}

/// Rainbow breadth-first search.
///
/// Each active vertex queries all undiscovered vertices in ascending order
/// and keeps an edge only if its colour is new. Faithful mode enforces the
/// coupling with a binomial branching process: only the lowest
/// `(1 - delta) n + 1` ids may ever be discovered, every edge is rejected
/// with total probability exactly `delta / alpha` while colour clashes are
/// rarer than that, colours stay used across the whole forest, and the run
/// stops once a tree reaches `(delta - eps^2) n` vertices or the queue
/// empties after `eps^2 n` vertices. Greedy mode keeps every vertex and edge
/// it can, restarts the colour set with each tree and explores everything.
///
/// The trace holds the largest tree found, in discovery order.
pub fn rbfs_forest<R: Rng + ?Sized>(
    g: &ColouredGraph,
    params: &RbfsParams,
    rng: &mut R,
) -> Result<ExplorationTrace, FinderError> {
    let n = g.n();
    let c = g.colours().max(1) as usize;
    let alpha = c as f64 / n.max(1) as f64;
    let faithful = params.mode == Mode::Faithful;
    if faithful {
        let bound = alpha.min(1.0);
        if !(params.delta > 0.0 && params.delta < bound) {
            return Err(FinderError::InvalidDelta { delta: params.delta, bound });
        }
    }

    let allowed = if faithful { (((1.0 - params.delta) * n as f64).floor() as usize + 1).min(n) } else { n };
    let reject_total = params.delta / alpha;
    let eps2n = params.epsilon * params.epsilon * n as f64;
    let large = params.delta * n as f64 - eps2n;

    let adj = g.adjacency();
    let mut discovered = vec![false; n];
    let mut order: Vec<Vertex> = Vec::with_capacity(allowed);
    let mut edge_of: Vec<EdgeId> = vec![usize::MAX; n];
    let mut used = vec![false; g.colours() as usize + 1];
    let mut tree_colours = Vec::new();
    let mut used_count = 0usize;
    let mut undiscovered = allowed;
    let mut queue = VecDeque::new();
    let (mut queries, mut accepted) = (0u64, 0u64);
    let mut best = (0usize, 0usize);
    let mut tree_start = 0usize;
    let mut fresh = 0usize;

    let stop = loop {
        let Some(v) = queue.pop_front() else {
            // current tree finished
            if order.len() - tree_start > best.1 - best.0 {
                best = (tree_start, order.len());
            }
            if faithful && order.len() as f64 >= eps2n && !order.is_empty() {
                break StopReason::ForestLimit;
            }
            if !faithful {
                for col in tree_colours.drain(..) {
                    used[col] = false;
                }
            }
            while fresh < allowed && discovered[fresh] {
                fresh += 1;
            }
            if fresh == allowed {
                break StopReason::Exhausted;
            }
            tree_start = order.len();
            discovered[fresh] = true;
            undiscovered -= 1;
            order.push(fresh as Vertex);
            queue.push_back(fresh as Vertex);
            continue;
        };
        queries += undiscovered as u64;
        for &(u, id) in adj.neighbours(v) {
            let ui = u as usize;
            if ui >= allowed || discovered[ui] {
                continue;
            }
            let colour = g.edge(id).colour as usize;
            if used[colour] {
                continue;
            }
            if faithful && rng.random::<f64>() < top_up(used_count as f64 / c as f64, reject_total) {
                continue;
            }
            accepted += 1;
            used[colour] = true;
            used_count += 1;
            tree_colours.push(colour);
            discovered[ui] = true;
            undiscovered -= 1;
            edge_of[ui] = id;
            order.push(u);
            queue.push_back(u);
        }
        if faithful && (order.len() - tree_start) as f64 >= large {
            best = (tree_start, order.len());
            break StopReason::TargetReached;
        }
    };

    let vertices = order[best.0..best.1].to_vec();
    let edges: Vec<EdgeId> = vertices.iter().skip(1).map(|&v| edge_of[v as usize]).collect();
    assert_rainbow_tree(g, &vertices, &edges);
    Ok(ExplorationTrace { queries, accepted, vertices, edges, stop })
}

/// Extra rejection probability that lifts a clash probability `clash` to a
/// total of `total`.
fn top_up(clash: f64, total: f64) -> f64 {
    if clash < total {
        (total - clash) / (1.0 - clash)
    } else {
        0.0
    }
}
