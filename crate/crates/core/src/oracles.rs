//! Exhaustive computations for small instances.
//!
//! Everything here is brute force by intent: the samplers and finders are
//! only trusted at scale once they agree with these on small inputs.

use thiserror::Error;

use crate::graph::{ColouredGraph, Colour, EdgeId, RootedForest, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("invalid instance: {0}")]
    Invalid(String),
}

/// Every member of a finite class, with an optional statistic per member.
#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub forests: Vec<RootedForest>,
    /// Canonical encoding of each member (its parent-array text form), sorted.
    pub encodings: Vec<String>,
    pub statistic: Option<Vec<f64>>,
}

impl EnumerationResult {
    pub fn count(&self) -> usize {
        self.forests.len()
    }

    pub fn with_statistic(mut self, stat: impl Fn(&RootedForest) -> f64) -> Self {
        self.statistic = Some(self.forests.iter().map(stat).collect());
        self
    }

    /// Mean of the attached statistic over all members.
    pub fn mean_statistic(&self) -> Option<f64> {
        self.statistic
            .as_ref()
            .map(|s| s.iter().sum::<f64>() / s.len() as f64)
    }
}

const MAX_FOREST_ORDER: usize = 8;

/// All of `F(m, t)`, found by scanning `(m - t)`-edge subsets of `K_m` and
/// keeping those that are acyclic and separate the roots `0..t`.
pub fn enumerate_forests(m: usize, t: usize) -> Result<EnumerationResult, OracleError> {
    if m > MAX_FOREST_ORDER {
        return Err(OracleError::TooLarge(format!("m = {m} > {MAX_FOREST_ORDER}")));
    }
    if t == 0 || t > m {
        return Err(OracleError::Invalid(format!("need 1 <= t <= m, got m = {m}, t = {t}")));
    }
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let mut label: Vec<usize> = (0..m).collect();
    let mut chosen = Vec::with_capacity(m - t);
    let mut forests = Vec::new();
    choose_forest_edges(&pairs, 0, m - t, t, &mut label, &mut chosen, &mut |edges| {
        forests.push(orient(m, t, edges));
    });
    let mut encodings: Vec<String> = forests.iter().map(|f| f.to_string()).collect();
    encodings.sort();
    Ok(EnumerationResult { forests, encodings, statistic: None })
}

/// `label[v]` is the component label; labels below `t` mark root components.
fn choose_forest_edges(
    pairs: &[(usize, usize)],
    from: usize,
    remaining: usize,
    t: usize,
    label: &mut Vec<usize>,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    for i in from..pairs.len() {
        if pairs.len() - i < remaining {
            break;
        }
        let (a, b) = pairs[i];
        let (la, lb) = (label[a], label[b]);
        if la == lb || (la < t && lb < t) {
            continue;
        }
        let saved = label.clone();
        let (keep, drop) = if la < lb { (la, lb) } else { (lb, la) };
        for l in label.iter_mut() {
            if *l == drop {
                *l = keep;
            }
        }
        chosen.push((a, b));
        choose_forest_edges(pairs, i + 1, remaining - 1, t, label, chosen, emit);
        chosen.pop();
        *label = saved;
    }
}

fn orient(m: usize, t: usize, edges: &[(usize, usize)]) -> RootedForest {
    let mut parent: Vec<Option<Vertex>> = vec![None; m];
    let mut seen = vec![false; m];
    let mut queue: Vec<usize> = (0..t).collect();
    seen[..t].fill(true);
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &(a, b) in edges {
            let w = if a == v { b } else if b == v { a } else { continue };
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v as Vertex);
                queue.push(w);
            }
        }
    }
    RootedForest::from_parent_vec(t, parent)
}

const MAX_TREE_SEARCH_EDGES: usize = 22;

/// A largest rainbow tree of `g`, as edge ids in increasing order.
///
/// Scans edge subsets depth-first (include before exclude), pruning colour
/// clashes, cycles, and branches that cannot beat the incumbent. Among
/// maximum trees the lexicographically smallest id list wins. An empty
/// result is a single vertex (or nothing, when `n == 0`).
pub fn exact_max_rainbow_tree(g: &ColouredGraph) -> Result<Vec<EdgeId>, OracleError> {
    let m = g.edge_count();
    if m > MAX_TREE_SEARCH_EDGES {
        return Err(OracleError::TooLarge(format!("{m} edges > {MAX_TREE_SEARCH_EDGES}")));
    }
    let mut search = TreeSearch {
        g,
        label: (0..g.n()).collect(),
        colours: Vec::new(),
        chosen: Vec::new(),
        best: Vec::new(),
    };
    search.run(0);
    Ok(search.best)
}

struct TreeSearch<'a> {
    g: &'a ColouredGraph,
    label: Vec<usize>,
    colours: Vec<Colour>,
    chosen: Vec<EdgeId>,
    best: Vec<EdgeId>,
}

impl TreeSearch<'_> {
    fn run(&mut self, next: usize) {
        let m = self.g.edge_count();
        if self.chosen.len() + (m - next) <= self.best.len() {
            return;
        }
        if next == m {
            if self.is_connected() {
                self.best = self.chosen.clone();
            }
            return;
        }
        let e = self.g.edge(next);
        let (la, lb) = (self.label[e.u as usize], self.label[e.v as usize]);
        if la != lb && !self.colours.contains(&e.colour) {
            let saved = self.label.clone();
            for l in self.label.iter_mut() {
                if *l == lb {
                    *l = la;
                }
            }
            self.colours.push(e.colour);
            self.chosen.push(next);
            self.run(next + 1);
            self.chosen.pop();
            self.colours.pop();
            self.label = saved;
        }
        self.run(next + 1);
    }

    /// The chosen edges are acyclic by construction, so they form a tree iff
    /// they touch exactly one more vertex than they have edges.
    fn is_connected(&self) -> bool {
        let mut vs: Vec<Vertex> = self
            .chosen
            .iter()
            .flat_map(|&id| {
                let e = self.g.edge(id);
                [e.u, e.v]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs.len() == self.chosen.len() + 1 || self.chosen.is_empty()
    }
}

/// Exact expectation of the smaller side when a uniform edge is removed from
/// a uniform labelled tree on `m` vertices, by enumerating every
/// `(tree, edge)` pair.
pub fn exact_min_deleted_component_expectation(m: usize) -> Result<f64, OracleError> {
    if m > 7 {
        return Err(OracleError::TooLarge(format!("m = {m} > 7")));
    }
    if m < 2 {
        return Err(OracleError::Invalid("a tree needs at least two vertices to have an edge".into()));
    }
    let trees = enumerate_forests(m, 1)?;
    let (mut total, mut count) = (0u64, 0u64);
    for f in &trees.forests {
        let sizes = f.subtree_sizes();
        for e in f.edges() {
            let b = sizes[e.child as usize];
            total += b.min(m - b) as u64;
            count += 1;
        }
    }
    Ok(total as f64 / count as f64)
}

/// Exact mean bridge number of a uniform edge of a uniform `F(m, t)`.
pub fn exact_mean_bridge_number(m: usize, t: usize) -> Result<f64, OracleError> {
    if t >= m {
        return Err(OracleError::Invalid("the forest has no edges".into()));
    }
    let all = enumerate_forests(m, t)?.with_statistic(|f| {
        let sizes = f.subtree_sizes();
        f.edges().map(|e| sizes[e.child as usize] as f64).sum::<f64>() / f.edge_count() as f64
    });
    Ok(all.mean_statistic().unwrap())
}

/// Exact mean of `min(B_e, B_e')` over a uniform `F(m, t)` and a uniform
/// ordered pair of distinct edges.
pub fn exact_mean_min_double_bridge(m: usize, t: usize) -> Result<f64, OracleError> {
    if m < t + 2 {
        return Err(OracleError::Invalid("need at least two forest edges".into()));
    }
    let all = enumerate_forests(m, t)?.with_statistic(|f| {
        let sizes = f.subtree_sizes();
        let b: Vec<usize> = (f.t()..f.m()).map(|w| sizes[w]).collect();
        let mut total = 0usize;
        for i in 0..b.len() {
            for j in 0..b.len() {
                if i != j {
                    total += b[i].min(b[j]);
                }
            }
        }
        total as f64 / (b.len() * (b.len() - 1)) as f64
    });
    Ok(all.mean_statistic().unwrap())
}

/// `ln k!`, summed directly.
fn ln_factorial(k: u64) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}

/// Borel(1) probability mass `e^{-k} k^{k-1} / k!`; zero at `k = 0`.
pub fn borel_pmf(k: u64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let kf = k as f64;
    (-kf + (kf - 1.0) * kf.ln() - ln_factorial(k)).exp()
}

/// `sum_{k=1}^{kmax} borel_pmf(k)`, accumulated in one pass.
pub fn borel_partial_sum(kmax: u64) -> f64 {
    let mut ln_fact = 0.0;
    let mut sum = 0.0;
    for k in 1..=kmax {
        let kf = k as f64;
        ln_fact += kf.ln();
        sum += (-kf + (kf - 1.0) * kf.ln() - ln_fact).exp();
    }
    sum
}
