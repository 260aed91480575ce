use std::collections::VecDeque;

use super::{Adjacency, ColouredGraph, EdgeId, GraphError, RootedForest, Vertex};

/// Marks the vertices of the 2-core, optionally restricted to the vertex set
/// `within`. Peels vertices of degree at most one until none remain.
pub fn two_core_mask(g: &ColouredGraph, within: Option<&[bool]>) -> Vec<bool> {
    let n = g.n();
    let adj = g.adjacency();
    let inside = |v: usize| within.is_none_or(|w| w[v]);
    let mut deg: Vec<usize> = (0..n).map(|v| if inside(v) { adj.degree(v as Vertex) } else { 0 }).collect();
    let mut alive: Vec<bool> = (0..n).map(inside).collect();
    let mut queued = vec![false; n];
    let mut edge_gone = vec![false; g.edge_count()];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if alive[v] && deg[v] <= 1 {
            queued[v] = true;
            queue.push_back(v as Vertex);
        }
    }
    while let Some(v) = queue.pop_front() {
        alive[v as usize] = false;
        for &(u, id) in adj.neighbours(v) {
            if edge_gone[id] {
                continue;
            }
            edge_gone[id] = true;
            let u = u as usize;
            if u != v as usize && alive[u] {
                deg[u] -= 1;
                if deg[u] <= 1 && !queued[u] {
                    queued[u] = true;
                    queue.push_back(u as Vertex);
                }
            }
        }
    }
    alive
}

/// The 2-core: the largest subgraph of minimum degree two. The result keeps
/// all `n` vertex ids; vertices outside the core are left isolated. Edge ids
/// are renumbered.
pub fn two_core(g: &ColouredGraph) -> ColouredGraph {
    let in_core = two_core_mask(g, None);
    let edges = g
        .edges()
        .iter()
        .filter(|e| in_core[e.u as usize] && in_core[e.v as usize])
        .copied()
        .collect();
    ColouredGraph::from_parts(g.n(), g.colours(), edges, g.is_multigraph())
}

/// Split of the giant and unicyclic components into their 2-core and the
/// forest hanging off it.
///
/// The forest is relabelled to local ids so that it is an ordinary
/// [`RootedForest`]: the core vertices become roots `0..t` (ascending graph
/// id), the remaining vertices follow in breadth-first order from the core.
#[derive(Debug, Clone)]
pub struct CoreDecomposition {
    pub core_vertices: Vec<Vertex>,
    pub core_edges: Vec<EdgeId>,
    pub forest: RootedForest,
    /// Graph vertex of each local forest id.
    pub forest_vertices: Vec<Vertex>,
    /// Graph edge joining local non-root `w` to its parent, at index `w - t`.
    pub forest_edges: Vec<EdgeId>,
    pub unicyclic_vertices: Vec<Vertex>,
}

impl CoreDecomposition {
    pub fn edge_above(&self, local: usize) -> Option<EdgeId> {
        local.checked_sub(self.forest.t()).map(|i| self.forest_edges[i])
    }
}

pub fn core_forest_decomposition(
    g: &ColouredGraph,
    giant: &[Vertex],
    unicyclic: &[Vertex],
) -> Result<CoreDecomposition, GraphError> {
    let n = g.n();
    let mut in_set = vec![false; n];
    for &v in giant.iter().chain(unicyclic) {
        in_set[v as usize] = true;
    }
    let in_core = two_core_mask(g, Some(&in_set));
    if !giant.iter().any(|&v| in_core[v as usize]) {
        return Err(GraphError::EmptyCore);
    }

    let mut core_edges = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        if in_core[e.u as usize] && in_core[e.v as usize] {
            core_edges.push(id);
        }
    }

    let core_vertices: Vec<Vertex> = (0..n as Vertex).filter(|&v| in_core[v as usize]).collect();
    let t = core_vertices.len();
    let adj = Adjacency::new(g);
    let mut local = vec![usize::MAX; n];
    let mut forest_vertices = core_vertices.clone();
    let mut parent: Vec<Option<Vertex>> = vec![None; t];
    let mut forest_edges = Vec::new();
    for (i, &v) in core_vertices.iter().enumerate() {
        local[v as usize] = i;
    }
    let mut head = 0;
    while head < forest_vertices.len() {
        let v = forest_vertices[head];
        head += 1;
        for &(u, id) in adj.neighbours(v) {
            if in_core[u as usize] || local[u as usize] != usize::MAX || !in_set[u as usize] {
                continue;
            }
            local[u as usize] = forest_vertices.len();
            forest_vertices.push(u);
            parent.push(Some(local[v as usize] as Vertex));
            forest_edges.push(id);
        }
    }
    if forest_vertices.len() != in_set.iter().filter(|&&b| b).count() {
        return Err(GraphError::InvalidForest(
            "a selected component has no cycle, so its tree cannot be rooted in the core".into(),
        ));
    }

    let mut unicyclic_vertices = unicyclic.to_vec();
    unicyclic_vertices.sort_unstable();
    Ok(CoreDecomposition {
        core_vertices,
        core_edges,
        forest: RootedForest::from_parent_vec(t, parent),
        forest_vertices,
        forest_edges,
        unicyclic_vertices,
    })
}
