use super::{ColouredGraph, Vertex};

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn set_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}

/// A component is named by the smallest vertex it contains.
pub type ComponentId = Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    component: Vec<ComponentId>,
    /// `(id, size)`, largest first; equal sizes ordered by id.
    sizes: Vec<(ComponentId, usize)>,
    /// Size indexed by component id (zero for non-ids).
    size_by_id: Vec<usize>,
}

impl VertexPartition {
    pub fn component_of(&self, v: Vertex) -> ComponentId {
        self.component[v as usize]
    }

    pub fn labels(&self) -> &[ComponentId] {
        &self.component
    }

    pub fn sizes(&self) -> &[(ComponentId, usize)] {
        &self.sizes
    }

    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    /// Largest component; ties go to the one containing the smallest vertex.
    pub fn largest(&self) -> Option<(ComponentId, usize)> {
        self.sizes.first().copied()
    }

    pub fn size_of(&self, id: ComponentId) -> usize {
        self.size_by_id.get(id as usize).copied().unwrap_or(0)
    }

    pub fn members(&self, id: ComponentId) -> Vec<Vertex> {
        self.component
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == id)
            .map(|(v, _)| v as Vertex)
            .collect()
    }
}

pub fn connected_components(g: &ColouredGraph) -> VertexPartition {
    partition_by(g.n(), g.edges().iter().map(|e| (e.u, e.v)))
}

pub(crate) fn partition_by(n: usize, pairs: impl Iterator<Item = (Vertex, Vertex)>) -> VertexPartition {
    let mut sets = DisjointSets::new(n);
    for (u, v) in pairs {
        sets.union(u as usize, v as usize);
    }
    let mut label_of_root = vec![Vertex::MAX; n];
    let mut component = vec![0; n];
    let mut count = vec![0usize; n];
    for v in 0..n {
        let r = sets.find(v);
        if label_of_root[r] == Vertex::MAX {
            label_of_root[r] = v as Vertex;
        }
        component[v] = label_of_root[r];
        count[label_of_root[r] as usize] += 1;
    }
    let mut sizes: Vec<(ComponentId, usize)> = count
        .iter()
        .enumerate()
        .filter(|&(_, &s)| s > 0)
        .map(|(id, &s)| (id as ComponentId, s))
        .collect();
    sizes.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    VertexPartition { component, sizes, size_by_id: count }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn empty_graph_is_all_singletons() {
        let p = connected_components(&ColouredGraph::empty(3, 0));
        assert_eq!(p.sizes(), &[(0, 1), (1, 1), (2, 1)]);
        assert_eq!(p.labels(), &[0, 1, 2]);
    }

    #[test]
    fn path_plus_isolated_vertex() {
        let g = ColouredGraph::new(4, 0, vec![Edge::new(1, 2, 0), Edge::new(0, 1, 0)]).unwrap();
        let p = connected_components(&g);
        assert_eq!(p.sizes(), &[(0, 3), (3, 1)]);
        assert_eq!(p.members(0), vec![0, 1, 2]);
        assert_eq!(p.component_of(2), 0);
        assert_eq!(p.largest(), Some((0, 3)));
    }

    #[test]
    fn ties_prefer_smallest_vertex() {
        let g = ColouredGraph::new(4, 0, vec![Edge::new(3, 2, 0), Edge::new(0, 1, 0)]).unwrap();
        assert_eq!(connected_components(&g).largest(), Some((0, 2)));
    }

    #[test]
    fn disjoint_sets_track_sizes() {
        let mut d = DisjointSets::new(5);
        assert!(d.union(0, 1));
        assert!(d.union(3, 1));
        assert!(!d.union(0, 3));
        assert_eq!(d.set_size(3), 3);
        assert_eq!(d.set_size(4), 1);
    }
}
