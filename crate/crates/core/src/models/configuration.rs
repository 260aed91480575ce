use rand::Rng;

use super::ModelError;
use crate::graph::{ColouredGraph, Edge, Vertex};

/// Vertex degrees for the configuration model; the sum is always even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Result<Self, ModelError> {
        let sum: usize = degrees.iter().sum();
        if sum % 2 == 1 {
            return Err(ModelError::OddDegreeSum(sum));
        }
        Ok(Self { degrees })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn half_edges(&self) -> usize {
        self.degrees.iter().sum()
    }
}

/// Uniform random configuration on the half-edges of `d`, returned as an
/// uncoloured multigraph.
///
/// The last unmatched half-edge is paired with a uniformly chosen partner
/// among the other unmatched ones until none remain; this yields a uniform
/// perfect matching.
pub fn sample_configuration<R: Rng + ?Sized>(d: &DegreeSequence, rng: &mut R) -> ColouredGraph {
    let mut pool: Vec<Vertex> = d
        .degrees()
        .iter()
        .enumerate()
        .flat_map(|(v, &k)| std::iter::repeat_n(v as Vertex, k))
        .collect();
    let mut edges = Vec::with_capacity(pool.len() / 2);
    while let Some(a) = pool.pop() {
        let j = rng.random_range(0..pool.len());
        let b = pool.swap_remove(j);
        edges.push(Edge::new(a, b, 0));
    }
    ColouredGraph::from_parts(d.len(), 0, edges, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;

    #[test]
    fn forced_matchings() {
        let mut rng = RngStream::new(5, 0).rng();
        let one_loop = sample_configuration(&DegreeSequence::new(vec![2]).unwrap(), &mut rng);
        assert_eq!(one_loop.edges(), &[Edge::new(0, 0, 0)]);
        let single = sample_configuration(&DegreeSequence::new(vec![1, 1]).unwrap(), &mut rng);
        assert_eq!(single.edges().len(), 1);
        assert_eq!(single.edges()[0].key(), (0, 1));
        assert!(single.is_multigraph());
    }

    #[test]
    fn odd_sum_is_rejected() {
        assert_eq!(DegreeSequence::new(vec![1, 2]), Err(ModelError::OddDegreeSum(3)));
    }

    #[test]
    fn degrees_preserved() {
        let d = DegreeSequence::new(vec![3, 1, 4, 0, 2, 2]).unwrap();
        for rep in 0..200 {
            let g = sample_configuration(&d, &mut RngStream::new(11, rep).rng());
            assert_eq!(g.degrees(), d.degrees());
        }
    }
}
