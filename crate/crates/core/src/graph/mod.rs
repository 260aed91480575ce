//! Coloured multigraphs and the deterministic structural algorithms run on them.
//!
//! Vertices are dense `u32` ids in `0..n`. Colours are `1..=c`; a graph with
//! `c == 0` is uncoloured and every edge carries colour `0`. Edge ids are
//! positions in [`ColouredGraph::edges`] and are stable for the lifetime of
//! the graph.

mod components;
mod decomposition;
mod forest;
mod io;

use std::collections::HashSet;

use thiserror::Error;

pub use components::{connected_components, ComponentId, DisjointSets, VertexPartition};
pub use decomposition::{core_forest_decomposition, two_core, two_core_mask, CoreDecomposition};
pub use forest::{bridge_number, ForestEdge, RootedForest};
pub use io::{read_edge_list, write_edge_list};

pub type Vertex = u32;
pub type Colour = u32;
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} endpoint {vertex} out of range for n = {n}")]
    VertexOutOfRange { edge: usize, vertex: Vertex, n: usize },
    #[error("edge {edge} has colour {colour}, expected a value in 1..={colours}")]
    ColourOutOfRange { edge: usize, colour: Colour, colours: Colour },
    #[error("edge {edge} is a loop at {vertex}; simple graphs reject loops")]
    Loop { edge: usize, vertex: Vertex },
    #[error("edge {edge} duplicates the pair ({u}, {v}); simple graphs reject parallel edges")]
    ParallelEdge { edge: usize, u: Vertex, v: Vertex },
    #[error("the 2-core of the selected components is empty")]
    EmptyCore,
    #[error("({parent}, {child}) is not an edge of the forest")]
    EdgeNotInForest { parent: Vertex, child: Vertex },
    #[error("invalid forest: {0}")]
    InvalidForest(String),
    #[error("malformed edge list at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GraphError {
    fn from(e: std::io::Error) -> Self {
        GraphError::Io(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub colour: Colour,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex, colour: Colour) -> Self {
        Self { u, v, colour }
    }

    /// Endpoints with the smaller id first.
    pub fn key(&self) -> (Vertex, Vertex) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// An undirected graph with one colour per edge.
///
/// Simple graphs are validated on construction. Loops and parallel edges are
/// only admitted on graphs built with [`ColouredGraph::multigraph`], which is
/// what the configuration model produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouredGraph {
    n: usize,
    colours: Colour,
    edges: Vec<Edge>,
    multigraph: bool,
}

impl ColouredGraph {
    pub fn new(n: usize, colours: Colour, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let g = Self { n, colours, edges, multigraph: false };
        g.validate()?;
        Ok(g)
    }

    pub fn multigraph(n: usize, colours: Colour, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let g = Self { n, colours, edges, multigraph: true };
        g.validate()?;
        Ok(g)
    }

    /// Empty graph on `n` vertices.
    pub fn empty(n: usize, colours: Colour) -> Self {
        Self { n, colours, edges: Vec::new(), multigraph: false }
    }

    /// Skips validation; samplers use this for edge lists they construct correctly by design.
    pub(crate) fn from_parts(n: usize, colours: Colour, edges: Vec<Edge>, multigraph: bool) -> Self {
        let g = Self { n, colours, edges, multigraph };
        debug_assert!(g.validate().is_ok());
        g
    }

    fn validate(&self) -> Result<(), GraphError> {
        let mut seen = HashSet::new();
        for (i, e) in self.edges.iter().enumerate() {
            for x in [e.u, e.v] {
                if x as usize >= self.n {
                    return Err(GraphError::VertexOutOfRange { edge: i, vertex: x, n: self.n });
                }
            }
            let colour_ok = if self.colours == 0 {
                e.colour == 0
            } else {
                (1..=self.colours).contains(&e.colour)
            };
            if !colour_ok {
                return Err(GraphError::ColourOutOfRange {
                    edge: i,
                    colour: e.colour,
                    colours: self.colours,
                });
            }
            if !self.multigraph {
                if e.is_loop() {
                    return Err(GraphError::Loop { edge: i, vertex: e.u });
                }
                let (u, v) = e.key();
                if !seen.insert((u, v)) {
                    return Err(GraphError::ParallelEdge { edge: i, u, v });
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of colours `c`; zero for an uncoloured graph.
    pub fn colours(&self) -> Colour {
        self.colours
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_multigraph(&self) -> bool {
        self.multigraph
    }

    pub fn is_coloured(&self) -> bool {
        self.colours > 0
    }

    /// Degrees with loops counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u as usize] += 1;
            deg[e.v as usize] += 1;
        }
        deg
    }

    /// Replaces the colouring. `colours` must be parallel to the edge list.
    pub fn with_colours(&self, colours: Colour, colour_of: &[Colour]) -> Result<Self, GraphError> {
        assert_eq!(colour_of.len(), self.edges.len());
        let edges = self
            .edges
            .iter()
            .zip(colour_of)
            .map(|(e, &c)| Edge::new(e.u, e.v, c))
            .collect();
        let g = Self { n: self.n, colours, edges, multigraph: self.multigraph };
        g.validate()?;
        Ok(g)
    }

    pub fn adjacency(&self) -> Adjacency {
        Adjacency::new(self)
    }
}

/// Compressed adjacency lists, each sorted by `(neighbour, edge id)`.
///
/// A loop at `v` appears twice in the list of `v`.
#[derive(Debug, Clone)]
pub struct Adjacency {
    offsets: Vec<usize>,
    entries: Vec<(Vertex, EdgeId)>,
}

impl Adjacency {
    pub fn new(g: &ColouredGraph) -> Self {
        let n = g.n();
        let mut offsets = vec![0usize; n + 1];
        for e in g.edges() {
            offsets[e.u as usize + 1] += 1;
            offsets[e.v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut entries = vec![(0, 0); offsets[n]];
        for (id, e) in g.edges().iter().enumerate() {
            entries[fill[e.u as usize]] = (e.v, id);
            fill[e.u as usize] += 1;
            entries[fill[e.v as usize]] = (e.u, id);
            fill[e.v as usize] += 1;
        }
        for v in 0..n {
            entries[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Self { offsets, entries }
    }

    pub fn neighbours(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.entries[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// True if `u` and `v` are joined by at least one edge.
    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        let list = self.neighbours(u);
        let i = list.partition_point(|&(x, _)| x < v);
        i < list.len() && list[i].0 == v
    }
}

/// True iff the colours on `edge_ids` are pairwise distinct.
pub fn is_rainbow(g: &ColouredGraph, edge_ids: &[EdgeId]) -> bool {
    let mut seen = HashSet::with_capacity(edge_ids.len());
    edge_ids.iter().all(|&id| seen.insert(g.edge(id).colour))
}

/// Vertices touched by `edge_ids`, sorted.
pub fn edge_set_vertices(g: &ColouredGraph, edge_ids: &[EdgeId]) -> Vec<Vertex> {
    let mut vs: Vec<Vertex> = edge_ids
        .iter()
        .flat_map(|&id| {
            let e = g.edge(id);
            [e.u, e.v]
        })
        .collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// True iff `edge_ids` is the edge set of a tree (acyclic and connected on
/// the vertices it touches). The empty set counts as a single-vertex tree.
pub fn is_tree(g: &ColouredGraph, edge_ids: &[EdgeId]) -> bool {
    if edge_ids.is_empty() {
        return true;
    }
    let vertices = edge_set_vertices(g, edge_ids);
    if vertices.len() != edge_ids.len() + 1 {
        return false;
    }
    let index = |x: Vertex| vertices.binary_search(&x).unwrap();
    let mut sets = DisjointSets::new(vertices.len());
    edge_ids.iter().all(|&id| {
        let e = g.edge(id);
        sets.union(index(e.u), index(e.v))
    })
}

/// True iff the subgraph formed by `edge_ids` is connected on its vertices.
pub fn is_connected_edge_set(g: &ColouredGraph, edge_ids: &[EdgeId]) -> bool {
    let vertices = edge_set_vertices(g, edge_ids);
    if vertices.len() <= 1 {
        return true;
    }
    let index = |x: Vertex| vertices.binary_search(&x).unwrap();
    let mut sets = DisjointSets::new(vertices.len());
    let mut merges = 0;
    for &id in edge_ids {
        let e = g.edge(id);
        if sets.union(index(e.u), index(e.v)) {
            merges += 1;
        }
    }
    merges == vertices.len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(colours: [Colour; 3]) -> ColouredGraph {
        ColouredGraph::new(
            3,
            3,
            vec![Edge::new(0, 1, colours[0]), Edge::new(1, 2, colours[1]), Edge::new(2, 0, colours[2])],
        )
        .unwrap()
    }

    #[test]
    fn simple_mode_rejects_loops_and_parallels() {
        assert_eq!(
            ColouredGraph::new(2, 1, vec![Edge::new(1, 1, 1)]),
            Err(GraphError::Loop { edge: 0, vertex: 1 })
        );
        assert_eq!(
            ColouredGraph::new(2, 1, vec![Edge::new(0, 1, 1), Edge::new(1, 0, 1)]),
            Err(GraphError::ParallelEdge { edge: 1, u: 0, v: 1 })
        );
        assert!(ColouredGraph::multigraph(2, 1, vec![Edge::new(1, 1, 1), Edge::new(0, 1, 1), Edge::new(0, 1, 1)]).is_ok());
    }

    #[test]
    fn colours_and_endpoints_are_range_checked() {
        assert!(matches!(
            ColouredGraph::new(2, 3, vec![Edge::new(0, 1, 4)]),
            Err(GraphError::ColourOutOfRange { .. })
        ));
        assert!(matches!(
            ColouredGraph::new(2, 3, vec![Edge::new(0, 1, 0)]),
            Err(GraphError::ColourOutOfRange { .. })
        ));
        assert!(matches!(
            ColouredGraph::new(2, 3, vec![Edge::new(0, 2, 1)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(ColouredGraph::new(2, 0, vec![Edge::new(0, 1, 0)]).is_ok());
    }

    #[test]
    fn rainbow_checks() {
        let g = ColouredGraph::new(
            4,
            9,
            vec![Edge::new(0, 1, 7), Edge::new(2, 3, 7), Edge::new(1, 2, 1), Edge::new(0, 3, 2)],
        )
        .unwrap();
        assert!(is_rainbow(&g, &[0]));
        assert!(!is_rainbow(&g, &[0, 1]));
        assert!(is_rainbow(&g, &[0, 2, 3]));
        assert!(is_rainbow(&g, &[]));
    }

    #[test]
    fn tree_and_connectivity_checks() {
        let g = triangle([1, 2, 3]);
        assert!(is_tree(&g, &[0, 1]));
        assert!(!is_tree(&g, &[0, 1, 2]));
        assert!(is_connected_edge_set(&g, &[0, 1, 2]));
        let h = ColouredGraph::new(4, 2, vec![Edge::new(0, 1, 1), Edge::new(2, 3, 2)]).unwrap();
        assert!(!is_tree(&h, &[0, 1]));
        assert!(!is_connected_edge_set(&h, &[0, 1]));
    }

    #[test]
    fn adjacency_is_sorted_and_counts_loops_twice() {
        let g = ColouredGraph::multigraph(
            3,
            0,
            vec![Edge::new(2, 0, 0), Edge::new(0, 1, 0), Edge::new(1, 1, 0)],
        )
        .unwrap();
        let adj = g.adjacency();
        assert_eq!(adj.neighbours(0), &[(1, 1), (2, 0)]);
        assert_eq!(adj.degree(1), 3);
        assert_eq!(g.degrees(), vec![2, 3, 1]);
        assert!(adj.contains(0, 2));
        assert!(!adj.contains(2, 1));
    }
}
