use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::{assert_rainbow_tree, FinderError, RainbowTree};
use crate::graph::{
    connected_components, core_forest_decomposition, ColouredGraph, Colour, DisjointSets, EdgeId, GraphError, Vertex,
};

/// How one colour that appears on exactly two forest edges was resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchChoice {
    pub colour: Colour,
    pub deleted: EdgeId,
    pub deleted_bridge: usize,
    pub kept: EdgeId,
    pub kept_bridge: usize,
}

/// Per-stage accounting of the supercritical pipeline. `x1..x4` count the
/// vertices that each deletion step removes that were still present before
/// it; `x4` includes the core vertices outside the kept core component.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct PipelineReport {
    pub giant_order: usize,
    /// Vertices in the giant plus the unicyclic components.
    pub component_order: usize,
    pub core_order: usize,
    pub core_size: usize,
    pub non_unique_core_edges: usize,
    pub hat_core_order: usize,
    pub colour_set_size: usize,
    pub x1: usize,
    pub x2: usize,
    pub x3: usize,
    pub x4: usize,
    pub final_tree_order: usize,
    #[serde(skip)]
    pub double_colour_choices: Vec<BranchChoice>,
}

/// Rainbow tree through the 2-core of the giant component.
///
/// The core keeps only its uniquely coloured edges and is cut down to its
/// largest remaining component `Ĉ`. The forest hanging off the core then
/// loses the branch below every edge whose colour is used by `Ĉ`, every edge
/// whose colour appears three or more times in the forest, and the
/// lighter of each pair of edges sharing a colour (ties by edge id). Trees not
/// rooted in `Ĉ` are dropped and a spanning tree of what remains is returned.
pub fn supercritical_rainbow_tree(g: &ColouredGraph) -> Result<(RainbowTree, PipelineReport), FinderError> {
    let part = connected_components(g);
    let (giant, giant_order) = part.largest().ok_or(FinderError::EmptyCore)?;
    let labels = part.labels();
    let mut component_edges: HashMap<Vertex, usize> = HashMap::new();
    for e in g.edges() {
        *component_edges.entry(labels[e.u as usize]).or_default() += 1;
    }
    let unicyclic: Vec<Vertex> = (0..g.n() as Vertex)
        .filter(|&v| {
            let id = labels[v as usize];
            id != giant && component_edges.get(&id).copied().unwrap_or(0) == part.size_of(id)
        })
        .collect();
    let dec = core_forest_decomposition(g, &part.members(giant), &unicyclic).map_err(|e| match e {
        GraphError::EmptyCore => FinderError::EmptyCore,
        other => FinderError::Graph(other),
    })?;

    // (i) edges whose colour is repeated inside the core
    let mut core_count: HashMap<Colour, usize> = HashMap::new();
    for &id in &dec.core_edges {
        *core_count.entry(g.edge(id).colour).or_default() += 1;
    }
    let unique_core: Vec<EdgeId> =
        dec.core_edges.iter().copied().filter(|&id| core_count[&g.edge(id).colour] == 1).collect();

    // (ii) largest component of what is left, on the core vertex set
    let t = dec.forest.t();
    let local_of: HashMap<Vertex, usize> = dec.core_vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut sets = DisjointSets::new(t);
    let mut hat_edges = Vec::new();
    for &id in &unique_core {
        let e = g.edge(id);
        if sets.union(local_of[&e.u], local_of[&e.v]) {
            hat_edges.push(id);
        }
    }
    let mut anchor = 0;
    for i in 0..t {
        if sets.set_size(i) > sets.set_size(anchor) {
            anchor = i;
        }
    }
    let hat_root = sets.find(anchor);
    let in_hat: Vec<bool> = (0..t).map(|i| sets.find(i) == hat_root).collect();
    hat_edges.retain(|&id| in_hat[local_of[&g.edge(id).u]]);
    let z: HashSet<Colour> = unique_core
        .iter()
        .filter(|&&id| in_hat[local_of[&g.edge(id).u]])
        .map(|&id| g.edge(id).colour)
        .collect();

    // (iii) the forest steps
    let f = &dec.forest;
    let m = f.m();
    let bfs = f.order();
    let bridge = f.subtree_sizes();
    let colour_above = |w: usize| g.edge(dec.forest_edges[w - t]).colour;
    let mut forest_count: HashMap<Colour, Vec<usize>> = HashMap::new();
    for w in t..m {
        forest_count.entry(colour_above(w)).or_default().push(w);
    }

    let mut cut = vec![false; m];
    let mut alive = vec![true; m];
    let sweep = |cut: &[bool], alive: &mut [bool]| {
        let mut killed = 0;
        for &w in &bfs {
            let w = w as usize;
            let dead = cut[w] || f.parent(w as Vertex).is_some_and(|p| !alive[p as usize]);
            if dead && alive[w] {
                alive[w] = false;
                killed += 1;
            }
        }
        killed
    };

    for w in t..m {
        if z.contains(&colour_above(w)) {
            cut[w] = true;
        }
    }
    let x1 = sweep(&cut, &mut alive);

    for below in forest_count.values().filter(|ws| ws.len() >= 3) {
        for &w in below {
            cut[w] = true;
        }
    }
    let x2 = sweep(&cut, &mut alive);

    let mut choices = Vec::new();
    for (&colour, below) in &forest_count {
        if let [a, b] = below[..] {
            let key = |w: usize| (bridge[w], dec.forest_edges[w - t]);
            let (lose, keep) = if key(a) <= key(b) { (a, b) } else { (b, a) };
            cut[lose] = true;
            choices.push(BranchChoice {
                colour,
                deleted: dec.forest_edges[lose - t],
                deleted_bridge: bridge[lose],
                kept: dec.forest_edges[keep - t],
                kept_bridge: bridge[keep],
            });
        }
    }
    choices.sort_unstable_by_key(|c| c.colour);
    let x3 = sweep(&cut, &mut alive);

    let roots = f.roots();
    let mut x4 = 0;
    for w in 0..m {
        if alive[w] && !in_hat[roots[w] as usize] {
            alive[w] = false;
            x4 += 1;
        }
    }

    let mut vertices: Vec<Vertex> = (0..m).filter(|&w| alive[w]).map(|w| dec.forest_vertices[w]).collect();
    vertices.sort_unstable();
    let mut edges = hat_edges;
    edges.extend((t..m).filter(|&w| alive[w]).map(|w| dec.forest_edges[w - t]));
    assert_rainbow_tree(g, &vertices, &edges);

    let report = PipelineReport {
        giant_order,
        component_order: m,
        core_order: t,
        core_size: dec.core_edges.len(),
        non_unique_core_edges: dec.core_edges.len() - unique_core.len(),
        hat_core_order: in_hat.iter().filter(|&&b| b).count(),
        colour_set_size: z.len(),
        x1,
        x2,
        x3,
        x4,
        final_tree_order: vertices.len(),
        double_colour_choices: choices,
    };
    Ok((RainbowTree { vertices, edges }, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn graph(n: usize, edges: &[(Vertex, Vertex, Colour)]) -> ColouredGraph {
        ColouredGraph::new(n, 20, edges.iter().map(|&(u, v, c)| Edge::new(u, v, c)).collect()).unwrap()
    }

    #[test]
    fn rainbow_cycle_loses_one_edge() {
        let g = graph(5, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 4, 4), (4, 0, 5)]);
        let (tree, report) = supercritical_rainbow_tree(&g).unwrap();
        assert_eq!(tree.order(), 5);
        assert_eq!(tree.edges.len(), 4);
        assert_eq!(report.hat_core_order, 5);
        assert_eq!((report.x1, report.x2, report.x3, report.x4), (0, 0, 0, 0));
    }

    #[test]
    fn pendant_sharing_a_core_colour_is_cut() {
        let g = graph(4, &[(0, 1, 1), (1, 2, 2), (2, 0, 3), (2, 3, 2)]);
        let (tree, report) = supercritical_rainbow_tree(&g).unwrap();
        assert_eq!(tree.order(), 3);
        assert_eq!(report.x1, 1);
        assert_eq!(report.colour_set_size, 3);
    }

    #[test]
    fn tree_reports_empty_core() {
        let g = graph(3, &[(0, 1, 1), (1, 2, 2)]);
        assert_eq!(supercritical_rainbow_tree(&g).unwrap_err(), FinderError::EmptyCore);
    }

    #[test]
    fn lighter_branch_of_a_colour_pair_goes() {
        // Triangle 0-1-2; vertex 0 carries a path 3-4 (colour 7 then 8),
        // vertex 1 carries a single leaf 5 via colour 7.
        let g = graph(6, &[(0, 1, 1), (1, 2, 2), (2, 0, 3), (0, 3, 7), (3, 4, 8), (1, 5, 7)]);
        let (tree, report) = supercritical_rainbow_tree(&g).unwrap();
        assert_eq!(tree.order(), 5);
        let choice = report.double_colour_choices[0];
        assert_eq!((choice.colour, choice.deleted, choice.deleted_bridge), (7, 5, 1));
        assert_eq!((choice.kept, choice.kept_bridge), (3, 2));
        assert_eq!(report.x3, 1);
    }

    #[test]
    fn triple_colour_removes_every_branch() {
        let g = graph(6, &[(0, 1, 1), (1, 2, 2), (2, 0, 3), (0, 3, 9), (1, 4, 9), (2, 5, 9)]);
        let (tree, report) = supercritical_rainbow_tree(&g).unwrap();
        assert_eq!(tree.order(), 3);
        assert_eq!(report.x2, 3);
    }

    #[test]
    fn repeated_core_colour_splits_the_core() {
        // Two triangles joined by a bridge-free shared vertex; colour 1 twice.
        let g = graph(5, &[(0, 1, 1), (1, 2, 2), (2, 0, 3), (2, 3, 4), (3, 4, 5), (4, 2, 1)]);
        let (tree, report) = supercritical_rainbow_tree(&g).unwrap();
        assert_eq!(report.non_unique_core_edges, 2);
        assert_eq!(report.hat_core_order, 5);
        assert_eq!(tree.order(), 5);
        assert_eq!(report.colour_set_size, 4);
    }

    #[test]
    fn unicyclic_component_trees_are_dropped() {
        let g = graph(
            8,
            &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, 4), (0, 4, 5), (5, 6, 6), (6, 7, 7), (7, 5, 8)],
        );
        let (tree, report) = supercritical_rainbow_tree(&g).unwrap();
        assert_eq!(report.component_order, 8);
        assert_eq!(report.core_order, 7);
        assert_eq!(report.hat_core_order, 4);
        assert_eq!(report.x4, 3);
        assert_eq!(tree.order(), 5);
    }
}
