use rand::Rng;

use super::ModelError;
use crate::graph::{Colour, ColouredGraph, Edge, Vertex};

/// Binomial random graph `G(n, p)`, uncoloured.
///
/// Pairs are visited in the order `(w, v)`, `w < v`, by increasing `v` then
/// `w`, and geometric skips jump straight to the next included pair, so the
/// expected cost is `O(n + p n^2)`.
pub fn sample_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<ColouredGraph, ModelError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(ModelError::InvalidProbability(p));
    }
    let mut edges = Vec::new();
    if n < 2 || p == 0.0 {
        return Ok(ColouredGraph::from_parts(n, 0, edges, false));
    }
    if p == 1.0 {
        for v in 1..n as Vertex {
            edges.extend((0..v).map(|w| Edge::new(w, v, 0)));
        }
        return Ok(ColouredGraph::from_parts(n, 0, edges, false));
    }
    let pairs = (n as f64) * (n as f64 - 1.0) / 2.0;
    edges.reserve((pairs * p * 1.05) as usize + 16);
    let log_q = (-p).ln_1p();
    let n = n as i64;
    let (mut v, mut w) = (1i64, -1i64);
    while v < n {
        let r: f64 = rng.random();
        let skip = ((1.0 - r).ln() / log_q).floor().min(1e15);
        w += 1 + skip as i64;
        while w >= v && v < n {
            w -= v;
            v += 1;
        }
        if v < n {
            edges.push(Edge::new(w as Vertex, v as Vertex, 0));
        }
    }
    Ok(ColouredGraph::from_parts(n as usize, 0, edges, false))
}

/// Recolours every edge independently and uniformly from `1..=c`, keeping
/// the edge order.
pub fn colour_uniform<R: Rng + ?Sized>(g: &ColouredGraph, c: Colour, rng: &mut R) -> Result<ColouredGraph, ModelError> {
    if c == 0 {
        return Err(ModelError::InvalidColourCount);
    }
    let edges = g
        .edges()
        .iter()
        .map(|e| Edge::new(e.u, e.v, rng.random_range(1..=c)))
        .collect();
    Ok(ColouredGraph::from_parts(g.n(), c, edges, g.is_multigraph()))
}

/// `G_c(n, p)`: [`sample_gnp`] followed by [`colour_uniform`] on the same stream.
pub fn sample_coloured_gnp<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    c: Colour,
    rng: &mut R,
) -> Result<ColouredGraph, ModelError> {
    let g = sample_gnp(n, p, rng)?;
    colour_uniform(&g, c, rng)
}
