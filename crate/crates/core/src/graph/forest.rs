use std::fmt;
use std::str::FromStr;

use super::{GraphError, Vertex};

const NO_PARENT: Vertex = Vertex::MAX;

/// A forest on `0..m` whose roots are exactly `0..t`, one per tree.
///
/// Stored as a parent array; every non-root points towards its root. This
/// orientation is what makes "the branch below an edge" well defined.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedForest {
    t: usize,
    parent: Vec<Vertex>,
}

/// Forest edge `parent -> child`, with `parent` nearer the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ForestEdge {
    pub parent: Vertex,
    pub child: Vertex,
}

impl RootedForest {
    /// Builds a forest from the parents of the non-root vertices `t..m`.
    pub fn from_parents(m: usize, t: usize, nonroot_parents: &[Vertex]) -> Result<Self, GraphError> {
        if t == 0 && m > 0 || t > m {
            return Err(GraphError::InvalidForest(format!("need 1 <= t <= m, got m = {m}, t = {t}")));
        }
        if nonroot_parents.len() != m - t {
            return Err(GraphError::InvalidForest(format!(
                "expected {} parents, got {}",
                m - t,
                nonroot_parents.len()
            )));
        }
        let mut parent = vec![NO_PARENT; t];
        for (i, &p) in nonroot_parents.iter().enumerate() {
            let v = t + i;
            if p as usize >= m || p as usize == v {
                return Err(GraphError::InvalidForest(format!("vertex {v} has invalid parent {p}")));
            }
            parent.push(p);
        }
        let f = Self { t, parent };
        if f.order().len() != m {
            return Err(GraphError::InvalidForest("parent pointers contain a cycle".into()));
        }
        Ok(f)
    }

    /// `parent[v]` for every vertex, `None` at the roots.
    pub(crate) fn from_parent_vec(t: usize, parent: Vec<Option<Vertex>>) -> Self {
        let parent = parent.into_iter().map(|p| p.unwrap_or(NO_PARENT)).collect();
        let f = Self { t, parent };
        debug_assert_eq!(f.peel().1, f.m());
        f
    }

    /// As [`Self::from_parent_vec`] without the acyclicity check, for
    /// samplers that are forests by construction.
    pub(crate) fn from_parent_vec_unchecked(t: usize, parent: Vec<Option<Vertex>>) -> Self {
        Self { t, parent: parent.into_iter().map(|p| p.unwrap_or(NO_PARENT)).collect() }
    }

    pub fn m(&self) -> usize {
        self.parent.len()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn is_root(&self, v: Vertex) -> bool {
        (v as usize) < self.t
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        match self.parent[v as usize] {
            NO_PARENT => None,
            p => Some(p),
        }
    }

    /// Parents of `t..m`, in order.
    pub fn nonroot_parents(&self) -> &[Vertex] {
        &self.parent[self.t..]
    }

    pub fn edge_count(&self) -> usize {
        self.m() - self.t
    }

    /// The edge joining non-root `child` to its parent.
    pub fn edge_above(&self, child: Vertex) -> Option<ForestEdge> {
        self.parent(child).map(|parent| ForestEdge { parent, child })
    }

    pub fn edges(&self) -> impl Iterator<Item = ForestEdge> + '_ {
        (self.t..self.m()).map(|w| ForestEdge { parent: self.parent[w], child: w as Vertex })
    }

    fn children(&self) -> (Vec<usize>, Vec<Vertex>) {
        let m = self.m();
        let mut offsets = vec![0usize; m + 1];
        for &p in &self.parent {
            if p != NO_PARENT {
                offsets[p as usize + 1] += 1;
            }
        }
        for i in 0..m {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut kids = vec![0; offsets[m]];
        for (v, &p) in self.parent.iter().enumerate() {
            if p != NO_PARENT {
                kids[fill[p as usize]] = v as Vertex;
                fill[p as usize] += 1;
            }
        }
        (offsets, kids)
    }

    /// Breadth-first order from the roots. Shorter than `m` only if the
    /// parent pointers contain a cycle.
    pub fn order(&self) -> Vec<Vertex> {
        let (offsets, kids) = self.children();
        let mut order: Vec<Vertex> = (0..self.t as Vertex).collect();
        let mut head = 0;
        while head < order.len() {
            let v = order[head] as usize;
            head += 1;
            order.extend_from_slice(&kids[offsets[v]..offsets[v + 1]]);
        }
        order
    }

    /// Size of the subtree hanging from each vertex (the vertex included).
    /// For a non-root `w` this is the bridge number of the edge above `w`.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        self.peel().0
    }

    /// Leaf peeling: a vertex passes its size up once all of its children
    /// have. Returns the sizes and how many vertices finished, which is `m`
    /// exactly when the parent pointers are acyclic.
    fn peel(&self) -> (Vec<usize>, usize) {
        let m = self.m();
        let mut pending = vec![0u32; m];
        for &p in &self.parent {
            if p != NO_PARENT {
                pending[p as usize] += 1;
            }
        }
        let mut size = vec![1usize; m];
        let mut done = 0;
        for start in 0..m {
            if pending[start] != 0 {
                continue;
            }
            let mut v = start;
            loop {
                pending[v] = u32::MAX;
                done += 1;
                let p = self.parent[v];
                if p == NO_PARENT {
                    break;
                }
                let p = p as usize;
                size[p] += size[v];
                pending[p] -= 1;
                if pending[p] != 0 || p > start {
                    break;
                }
                v = p;
            }
        }
        (size, done)
    }

    /// Root of the tree containing each vertex.
    pub fn roots(&self) -> Vec<Vertex> {
        let mut root = vec![0; self.m()];
        for v in self.order() {
            let p = self.parent[v as usize];
            root[v as usize] = if p == NO_PARENT { v } else { root[p as usize] };
        }
        root
    }

    /// Order of the tree containing each root `0..t`.
    pub fn tree_sizes(&self) -> Vec<usize> {
        let sizes = self.subtree_sizes();
        sizes[..self.t].to_vec()
    }
}

/// Number of vertices in the branch below `e`, i.e. in the component of
/// `f - e` that does not contain the root.
pub fn bridge_number(f: &RootedForest, e: ForestEdge) -> Result<usize, GraphError> {
    if (e.child as usize) >= f.m() || f.parent(e.child) != Some(e.parent) {
        return Err(GraphError::EdgeNotInForest { parent: e.parent, child: e.child });
    }
    let (offsets, kids) = f.children();
    let mut stack = vec![e.child];
    let mut count = 0;
    while let Some(v) = stack.pop() {
        count += 1;
        stack.extend_from_slice(&kids[offsets[v as usize]..offsets[v as usize + 1]]);
    }
    Ok(count)
}

/// Text form `m t p_t ... p_{m-1}`: the parents of the non-roots, 0-based.
impl fmt::Display for RootedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.m(), self.t)?;
        for p in self.nonroot_parents() {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

impl FromStr for RootedForest {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: String| GraphError::Parse { line: 1, reason };
        let nums = s
            .split_whitespace()
            .map(|tok| tok.parse::<u64>().map_err(|e| bad(format!("{tok:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if nums.len() < 2 {
            return Err(bad("expected `m t` header".into()));
        }
        let (m, t) = (nums[0] as usize, nums[1] as usize);
        let parents = nums[2..]
            .iter()
            .map(|&p| Vertex::try_from(p).map_err(|_| bad(format!("parent {p} too large"))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_parents(m, t, &parents)
    }
}
