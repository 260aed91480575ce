use std::collections::HashMap;

use super::{assert_rainbow_tree, RainbowTree};
use crate::graph::{connected_components, ColouredGraph, Colour, DisjointSets, Vertex};

/// Rainbow tree from the largest component by deleting every edge whose
/// colour repeats inside it.
///
/// The survivors are rainbow; the largest surviving component is returned
/// with a spanning tree of its edges (the component itself when the largest
/// component was a tree). Ties between components go to the one holding the
/// smallest vertex.
pub fn subcritical_rainbow_tree(g: &ColouredGraph) -> RainbowTree {
    let part = connected_components(g);
    let Some((giant, _)) = part.largest() else {
        return RainbowTree::default();
    };
    let labels = part.labels();
    let inside: Vec<usize> = (0..g.edge_count())
        .filter(|&id| labels[g.edge(id).u as usize] == giant)
        .collect();

    let mut multiplicity: HashMap<Colour, u32> = HashMap::new();
    for &id in &inside {
        *multiplicity.entry(g.edge(id).colour).or_default() += 1;
    }
    let survivors: Vec<usize> = inside
        .into_iter()
        .filter(|&id| multiplicity[&g.edge(id).colour] == 1)
        .collect();

    let members = part.members(giant);
    let mut sets = DisjointSets::new(g.n());
    let mut spanning = Vec::new();
    for &id in &survivors {
        let e = g.edge(id);
        if sets.union(e.u as usize, e.v as usize) {
            spanning.push(id);
        }
    }
    // Members are ascending, so a strict comparison keeps the smallest vertex on ties.
    let mut anchor = members[0];
    for &v in &members {
        if sets.set_size(v as usize) > sets.set_size(anchor as usize) {
            anchor = v;
        }
    }
    let root = sets.find(anchor as usize);
    let vertices: Vec<Vertex> = members.into_iter().filter(|&v| sets.find(v as usize) == root).collect();
    let edges: Vec<usize> = spanning
        .into_iter()
        .filter(|&id| sets.find(g.edge(id).u as usize) == root)
        .collect();
    assert_rainbow_tree(g, &vertices, &edges);
    RainbowTree { vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn path(colours: &[Colour]) -> ColouredGraph {
        let edges = colours.iter().enumerate().map(|(i, &c)| Edge::new(i as u32, i as u32 + 1, c)).collect();
        ColouredGraph::new(colours.len() + 1, 9, edges).unwrap()
    }

    #[test]
    fn rainbow_path_survives_whole() {
        let t = subcritical_rainbow_tree(&path(&[1, 2, 3]));
        assert_eq!(t.order(), 4);
        assert_eq!(t.edges, vec![0, 1, 2]);
    }

    #[test]
    fn repeated_colour_removes_both_copies() {
        let t = subcritical_rainbow_tree(&path(&[1, 2, 1]));
        assert_eq!(t.order(), 2);
        assert_eq!(t.edges, vec![1]);
        assert_eq!(t.vertices, vec![1, 2]);
    }

    #[test]
    fn empty_graph_gives_empty_tree() {
        assert_eq!(subcritical_rainbow_tree(&ColouredGraph::empty(0, 1)).order(), 0);
        assert_eq!(subcritical_rainbow_tree(&ColouredGraph::empty(3, 1)).order(), 1);
    }

    #[test]
    fn cyclic_component_gets_a_spanning_tree() {
        let g = ColouredGraph::new(
            4,
            5,
            vec![Edge::new(0, 1, 1), Edge::new(1, 2, 2), Edge::new(2, 0, 3), Edge::new(2, 3, 4)],
        )
        .unwrap();
        let t = subcritical_rainbow_tree(&g);
        assert_eq!(t.order(), 4);
        assert_eq!(t.edges, vec![0, 1, 3]);
    }
}
