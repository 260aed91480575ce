use super::{assert_rainbow_tree, ExplorationTrace, FinderError, Mode, StopReason};
use crate::graph::{ColouredGraph, EdgeId, Vertex};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RdfsParams {
    pub mode: Mode,
    /// Slack: the faithful run aims for a path of `(1 - delta) r` edges with
    /// `r = min(c, n)`.
    pub delta: f64,
    /// Overrides the faithful budget `ceil(delta^2 r n / 8)`; caps greedy runs.
    pub query_budget: Option<u64>,
    /// Whether a faithful run stops as soon as the target length is reached.
    pub stop_at_target: bool,
}

impl RdfsParams {
    pub fn faithful(delta: f64) -> Self {
        RdfsParams { mode: Mode::Faithful, delta, query_budget: None, stop_at_target: true }
    }

    pub fn greedy() -> Self {
        RdfsParams { mode: Mode::Greedy, delta: 0.0, query_budget: None, stop_at_target: false }
    }

    pub fn budget(&self, g: &ColouredGraph) -> Option<u64> {
        match self.mode {
            Mode::Faithful => Some(self.query_budget.unwrap_or_else(|| {
                let (n, r) = (g.n() as f64, r_of(g) as f64);
                (self.delta * self.delta * r * n / 8.0).ceil() as u64
            })),
            Mode::Greedy => self.query_budget,
        }
    }

    /// Path length (in edges) at which the run may stop early.
    pub fn target(&self, g: &ColouredGraph) -> usize {
        let longest = g.n().saturating_sub(1).min(g.colours().max(1) as usize);
        match self.mode {
            Mode::Faithful if self.stop_at_target => {
                (((1.0 - self.delta) * r_of(g) as f64).ceil() as usize).min(longest)
            }
            _ => longest,
        }
    }
}

fn r_of(g: &ColouredGraph) -> usize {
    g.n().min(g.colours() as usize)
}

/// Counts of still-unvisited vertex ids, for prefix queries.
struct Fenwick {
    tree: Vec<u32>,
}

impl Fenwick {
    fn ones(n: usize) -> Self {
        let mut tree = vec![0u32; n + 1];
        for i in 1..=n {
            tree[i] += 1;
            let j = i + (i & i.wrapping_neg());
            if j <= n {
                tree[j] += tree[i];
            }
        }
        Fenwick { tree }
    }

    fn remove(&mut self, i: usize) {
        let mut i = i + 1;
        while i < self.tree.len() {
            self.tree[i] -= 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Ones among ids `0..end`.
    fn prefix(&self, end: usize) -> u64 {
        let mut i = end;
        let mut s = 0u64;
        while i > 0 {
            s += self.tree[i] as u64;
            i -= i & i.wrapping_neg();
        }
        s
    }

    fn range(&self, start: usize, end: usize) -> u64 {
        self.prefix(end) - self.prefix(start)
    }
}

/// Rainbow depth-first search for a long rainbow path.
///
/// The top of the stack queries unvisited vertices in ascending id order and
/// moves the first one joined by an edge of a colour not yet on the stack
/// path. A vertex is retired once every pair to the unvisited set has been
/// queried; when the stack empties the smallest unvisited vertex starts a
/// new path. Queries are counted as in the pair-by-pair process, including
/// non-edges. The trace holds the longest stack path seen.
pub fn rdfs_longest_path(g: &ColouredGraph, params: &RdfsParams) -> Result<ExplorationTrace, FinderError> {
    if params.mode == Mode::Faithful && !(params.delta > 0.0 && params.delta < 1.0) {
        return Err(FinderError::InvalidDelta { delta: params.delta, bound: 1.0 });
    }
    let n = g.n();
    let budget = params.budget(g).unwrap_or(u64::MAX);
    let target = params.target(g);
    let adj = g.adjacency();

    let mut unvisited = Fenwick::ones(n);
    let mut visited = vec![false; n];
    let mut aptr = vec![0usize; n];
    let mut qpos = vec![0usize; n];
    let mut in_path = vec![false; g.colours() as usize + 1];
    let mut stack: Vec<Vertex> = Vec::new();
    let mut stack_edges: Vec<EdgeId> = Vec::new();
    let mut best: Vec<Vertex> = Vec::new();
    let mut best_edges: Vec<EdgeId> = Vec::new();
    // stack[..common] is known to coincide with best[..common]
    let mut common = 0usize;
    let mut fresh = 0usize;
    let (mut queries, mut accepted) = (0u64, 0u64);

    let stop = loop {
        if !stack.is_empty() && stack_edges.len() >= target {
            break StopReason::TargetReached;
        }
        let Some(&v) = stack.last() else {
            while fresh < n && visited[fresh] {
                fresh += 1;
            }
            if fresh == n {
                break StopReason::Exhausted;
            }
            visited[fresh] = true;
            unvisited.remove(fresh);
            stack.push(fresh as Vertex);
            if best.is_empty() {
                best.push(fresh as Vertex);
                common = 1;
            }
            continue;
        };
        let vi = v as usize;
        let list = adj.neighbours(v);
        let mut hit = None;
        while aptr[vi] < list.len() {
            let (u, id) = list[aptr[vi]];
            aptr[vi] += 1;
            if !visited[u as usize] && !in_path[g.edge(id).colour as usize] {
                hit = Some((u, id));
                break;
            }
        }
        let end = hit.map_or(n, |(u, _)| u as usize + 1);
        let cost = unvisited.range(qpos[vi], end);
        if queries + cost > budget {
            queries = budget;
            break StopReason::QueryBudget;
        }
        queries += cost;
        qpos[vi] = end;
        match hit {
            Some((u, id)) => {
                accepted += 1;
                visited[u as usize] = true;
                unvisited.remove(u as usize);
                in_path[g.edge(id).colour as usize] = true;
                stack.push(u);
                stack_edges.push(id);
                if stack.len() > best.len() {
                    best.truncate(common);
                    best.extend_from_slice(&stack[common..]);
                    best_edges.truncate(common.saturating_sub(1));
                    best_edges.extend_from_slice(&stack_edges[common.saturating_sub(1)..]);
                    common = stack.len();
                }
            }
            None => {
                stack.pop();
                if let Some(id) = stack_edges.pop() {
                    in_path[g.edge(id).colour as usize] = false;
                }
                common = common.min(stack.len());
            }
        }
    };

    assert!(accepted <= queries || n == 0);
    assert_rainbow_tree(g, &best, &best_edges);
    Ok(ExplorationTrace { queries, accepted, vertices: best, edges: best_edges, stop })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use crate::models::sample_coloured_gnp;
    use rand::SeedableRng;
    use std::collections::HashMap;

    /// Pair-by-pair transcription of the process, quadratic and obviously
    /// correct. Returns (queries, longest path, stop).
    fn naive(g: &ColouredGraph, budget: u64, target: usize) -> (u64, Vec<Vertex>, StopReason) {
        let n = g.n();
        let mut colours: HashMap<(Vertex, Vertex), Vec<u32>> = HashMap::new();
        for e in g.edges() {
            colours.entry(e.key()).or_default().push(e.colour);
        }
        let mut queried = vec![vec![false; n]; n];
        let mut visited = vec![false; n];
        let mut stack: Vec<Vertex> = Vec::new();
        let mut used: Vec<u32> = Vec::new();
        let mut best: Vec<Vertex> = Vec::new();
        let mut queries = 0;
        loop {
            if stack.len() > best.len() {
                best = stack.clone();
            }
            if !stack.is_empty() && stack.len() - 1 >= target {
                return (queries, best, StopReason::TargetReached);
            }
            let Some(&v) = stack.last() else {
                match (0..n).find(|&u| !visited[u]) {
                    None => return (queries, best, StopReason::Exhausted),
                    Some(u) => {
                        visited[u] = true;
                        stack.push(u as Vertex);
                        continue;
                    }
                }
            };
            let next = (0..n).find(|&u| !visited[u] && !queried[v as usize][u]);
            match next {
                None => {
                    stack.pop();
                    if !stack.is_empty() {
                        used.pop();
                    }
                }
                Some(u) => {
                    if queries == budget {
                        return (queries, best, StopReason::QueryBudget);
                    }
                    queries += 1;
                    queried[v as usize][u] = true;
                    let key = if v < u as Vertex { (v, u as Vertex) } else { (u as Vertex, v) };
                    let free = colours.get(&key).and_then(|cs| cs.iter().find(|c| !used.contains(c)));
                    if let Some(&c) = free {
                        used.push(c);
                        visited[u] = true;
                        stack.push(u as Vertex);
                    }
                }
            }
        }
    }

    #[test]
    fn matches_pair_by_pair_reference() {
        for seed in 0..200u64 {
            let mut rng = crate::SimRng::seed_from_u64(seed);
            let n = 2 + (seed % 11) as usize;
            let c = 1 + (seed % 7) as u32;
            let g = sample_coloured_gnp(n, 0.45, c, &mut rng).unwrap();
            for params in [
                RdfsParams::greedy(),
                RdfsParams::faithful(0.3),
                RdfsParams { query_budget: Some(seed % 13), ..RdfsParams::faithful(0.2) },
            ] {
                let trace = rdfs_longest_path(&g, &params).unwrap();
                let (q, best, stop) = naive(&g, params.budget(&g).unwrap_or(u64::MAX), params.target(&g));
                assert_eq!(trace.vertices.len(), best.len(), "seed {seed} {params:?}");
                assert_eq!((trace.queries, trace.stop), (q, stop), "seed {seed} {params:?}");
            }
        }
    }

    #[test]
    fn rainbow_path_is_followed_to_the_end() {
        let edges = (0..9).map(|i| Edge::new(i, i + 1, i + 1)).collect();
        let g = ColouredGraph::new(10, 9, edges).unwrap();
        let trace = rdfs_longest_path(&g, &RdfsParams::greedy()).unwrap();
        assert_eq!(trace.length(), 9);
        assert_eq!(trace.vertices, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn monochromatic_k4_gives_one_edge() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push(Edge::new(u, v, 1));
            }
        }
        let g = ColouredGraph::new(4, 1, edges).unwrap();
        assert_eq!(rdfs_longest_path(&g, &RdfsParams::greedy()).unwrap().length(), 1);
    }

    #[test]
    fn faithful_budget_is_exact() {
        let mut rng = crate::SimRng::seed_from_u64(3);
        let g = sample_coloured_gnp(300, 0.02, 300, &mut rng).unwrap();
        let params = RdfsParams::faithful(0.5);
        let trace = rdfs_longest_path(&g, &params).unwrap();
        assert_eq!(params.budget(&g), Some(2813));
        assert!(trace.queries <= 2813);
    }

    #[test]
    fn delta_is_validated() {
        let g = ColouredGraph::empty(3, 1);
        assert!(matches!(rdfs_longest_path(&g, &RdfsParams::faithful(1.0)), Err(FinderError::InvalidDelta { .. })));
        assert_eq!(rdfs_longest_path(&ColouredGraph::empty(0, 1), &RdfsParams::greedy()).unwrap().order(), 0);
    }
}
