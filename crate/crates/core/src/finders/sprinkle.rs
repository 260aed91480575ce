use std::collections::HashSet;

use rand::Rng;
use serde::Serialize;

use super::{rdfs_longest_path, ExplorationTrace, FinderError, Mode, RdfsParams};
use crate::graph::{ColouredGraph, Colour, Edge, EdgeId, Vertex};
use crate::models::{sample_coloured_gnp, ModelError};

/// A rainbow cycle made of a segment of a path in the first-round graph and
/// one closing edge from the second round.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowCycle {
    /// Cycle vertices in order; the closing edge joins the last to the first.
    pub vertices: Vec<Vertex>,
    /// First-round edge ids along `vertices`.
    pub path_edges: Vec<EdgeId>,
    /// Second-round edge id of the closing edge, and the edge itself.
    pub closing_id: EdgeId,
    pub closing: Edge,
}

impl RainbowCycle {
    /// Number of edges (equal to the number of vertices).
    pub fn length(&self) -> usize {
        self.path_edges.len() + 1
    }
}

/// Outcome of a path-then-sprinkle run. `cycle` is `None` when no
/// second-round edge closed the path.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SprinkledCycle {
    pub p1: f64,
    pub p2: f64,
    pub path: ExplorationTrace,
    pub cycle: Option<RainbowCycle>,
}

/// Second-round probability `p2` with `(1 - p2)(1 - p1) = 1 - p`, so that
/// the union of the two rounds is distributed as `G(n, p)`.
pub fn sprinkle_split(p: f64, p1: f64) -> Result<f64, ModelError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(ModelError::InvalidProbability(p));
    }
    if !(0.0..=p).contains(&p1) {
        return Err(ModelError::InvalidProbability(p1));
    }
    if p1 == 1.0 {
        return Ok(0.0);
    }
    Ok(((p - p1) / (1.0 - p1)).clamp(0.0, 1.0))
}

/// Closes the rainbow path `vertices`/`edges` of `g1` with the first edge of
/// `g2` that joins the first `window` path vertices to the last `window`,
/// is not already an edge of `g1`, and carries a colour absent from the
/// path. The window is capped at half the path.
pub fn close_cycle_with_window(
    g1: &ColouredGraph,
    vertices: &[Vertex],
    edges: &[EdgeId],
    g2: &ColouredGraph,
    window: usize,
) -> Result<RainbowCycle, FinderError> {
    let len = vertices.len();
    let window = window.min(len / 2);
    if window == 0 {
        return Err(FinderError::NotFound);
    }
    let mut pos = vec![usize::MAX; g1.n()];
    for (i, &v) in vertices.iter().enumerate() {
        pos[v as usize] = i;
    }
    let head = |v: Vertex| pos[v as usize] < window;
    let tail = |v: Vertex| pos[v as usize] != usize::MAX && pos[v as usize] >= len - window;
    let present: HashSet<(Vertex, Vertex)> = g1
        .edges()
        .iter()
        .filter(|e| (head(e.u) && tail(e.v)) || (head(e.v) && tail(e.u)))
        .map(|e| e.key())
        .collect();
    let path_colours: HashSet<Colour> = edges.iter().map(|&id| g1.edge(id).colour).collect();

    for (id, e) in g2.edges().iter().enumerate() {
        let (a, b) = match (head(e.u) && tail(e.v), head(e.v) && tail(e.u)) {
            (true, _) => (e.u, e.v),
            (_, true) => (e.v, e.u),
            _ => continue,
        };
        let (i, j) = (pos[a as usize], pos[b as usize]);
        if j < i + 2 || present.contains(&e.key()) || path_colours.contains(&e.colour) {
            continue;
        }
        let cycle = RainbowCycle {
            vertices: vertices[i..=j].to_vec(),
            path_edges: edges[i..j].to_vec(),
            closing_id: id,
            closing: *e,
        };
        let mut colours: HashSet<Colour> = cycle.path_edges.iter().map(|&x| g1.edge(x).colour).collect();
        assert!(colours.insert(e.colour), "closing colour repeats on the cycle");
        assert_eq!(colours.len(), cycle.length(), "cycle is not rainbow");
        return Ok(cycle);
    }
    Err(FinderError::NotFound)
}

/// Closes a path using windows of `delta / 4 * min(n, c)` vertices at each
/// end.
pub fn sprinkle_close_cycle(
    g1: &ColouredGraph,
    vertices: &[Vertex],
    edges: &[EdgeId],
    g2: &ColouredGraph,
    delta: f64,
) -> Result<RainbowCycle, FinderError> {
    let r = g1.n().min(g1.colours() as usize);
    let window = ((delta / 4.0 * r as f64).floor() as usize).max(1);
    close_cycle_with_window(g1, vertices, edges, g2, window)
}

/// Long rainbow cycle in `G_c(n, d/n)`: a rainbow DFS path in the first round
/// `G_c(n, (d-1)/n)`, closed by sprinkling the remaining edge probability.
/// A faithful search runs with slack `delta / 2`.
pub fn find_rainbow_cycle_sprinkled<R: Rng + ?Sized>(
    n: usize,
    c: Colour,
    d: f64,
    delta: f64,
    mode: Mode,
    rng: &mut R,
) -> Result<SprinkledCycle, FinderError> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(FinderError::InvalidDelta { delta, bound: 1.0 });
    }
    let p = d / n as f64;
    let p1 = (d - 1.0).max(0.0) / n as f64;
    let p2 = sprinkle_split(p, p1)?;
    let g1 = sample_coloured_gnp(n, p1, c, rng)?;
    let g2 = sample_coloured_gnp(n, p2, c, rng)?;
    let params = match mode {
        Mode::Faithful => RdfsParams::faithful(delta / 2.0),
        Mode::Greedy => RdfsParams::greedy(),
    };
    let path = rdfs_longest_path(&g1, &params)?;
    let cycle = match sprinkle_close_cycle(&g1, &path.vertices, &path.edges, &g2, delta) {
        Ok(cycle) => Some(cycle),
        Err(FinderError::NotFound) => None,
        Err(e) => return Err(e),
    };
    Ok(SprinkledCycle { p1, p2, path, cycle })
}

/// Rainbow cycle just above criticality, `p = (1 + 2 eps) / n`.
///
/// The first round `(1 + eps) / n` is searched by a faithful rainbow DFS
/// with slack `eps^2 n / (5c)` and budget `(eps / 2) n^2`, keeping the
/// longest path. Its first and last quarters are then joined by a
/// second-round edge.
pub fn find_rainbow_cycle_weakly_super<R: Rng + ?Sized>(
    n: usize,
    c: Colour,
    epsilon: f64,
    rng: &mut R,
) -> Result<SprinkledCycle, FinderError> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(FinderError::InvalidEpsilon(epsilon));
    }
    let nf = n as f64;
    let p1 = ((1.0 + epsilon) / nf).min(1.0);
    let p2 = sprinkle_split(((1.0 + 2.0 * epsilon) / nf).min(1.0), p1)?;
    let g1 = sample_coloured_gnp(n, p1, c, rng)?;
    let g2 = sample_coloured_gnp(n, p2, c, rng)?;
    let delta = (epsilon * epsilon * nf / (5.0 * c as f64)).min(0.5);
    let params = RdfsParams {
        query_budget: Some((epsilon / 2.0 * nf * nf).ceil() as u64),
        stop_at_target: false,
        ..RdfsParams::faithful(delta)
    };
    let path = rdfs_longest_path(&g1, &params)?;
    let window = path.vertices.len() / 4;
    let cycle = match close_cycle_with_window(&g1, &path.vertices, &path.edges, &g2, window) {
        Ok(cycle) => Some(cycle),
        Err(FinderError::NotFound) => None,
        Err(e) => return Err(e),
    };
    Ok(SprinkledCycle { p1, p2, path, cycle })
}
