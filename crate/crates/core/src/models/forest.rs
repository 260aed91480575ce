use rand::Rng;

use super::ModelError;
use crate::graph::{RootedForest, Vertex};

/// Uniform forest from `F(m, t)`: `m` labelled vertices, `t` trees, with
/// `0..t` the roots of distinct trees.
///
/// Decodes a uniform generalised Prüfer sequence `a_1 .. a_{m-t}` with
/// `a_i in 0..m` for `i < m - t` and `a_{m-t} in 0..t`. There are
/// `t m^(m-t-1)` such sequences, one per forest: step `i` hangs the smallest
/// non-root leaf (a vertex not occurring in `a_i ..`) below `a_i`. Linear
/// time.
pub fn sample_uniform_forest<R: Rng + ?Sized>(m: usize, t: usize, rng: &mut R) -> Result<RootedForest, ModelError> {
    if t == 0 || t > m {
        return Err(ModelError::InvalidRootCount { m, t });
    }
    assert!(m <= Vertex::MAX as usize, "forest too large for 32-bit vertex ids");
    let k = m - t;
    let mut parent: Vec<Option<Vertex>> = vec![None; m];
    if k == 0 {
        return Ok(RootedForest::from_parent_vec(t, parent));
    }
    let code: Vec<usize> = (0..k)
        .map(|i| if i + 1 < k { rng.random_range(0..m) } else { rng.random_range(0..t) })
        .collect();
    let mut count = vec![0u32; m];
    for &a in &code {
        count[a] += 1;
    }
    let mut ptr = t;
    while count[ptr] != 0 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &a in &code {
        parent[leaf] = Some(a as Vertex);
        count[a] -= 1;
        if a >= t && a < ptr && count[a] == 0 {
            leaf = a;
        } else {
            ptr += 1;
            while ptr < m && count[ptr] != 0 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    Ok(RootedForest::from_parent_vec_unchecked(t, parent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;

    #[test]
    fn all_roots_is_the_edgeless_forest() {
        let f = sample_uniform_forest(5, 5, &mut RngStream::new(1, 0).rng()).unwrap();
        assert_eq!(f.edge_count(), 0);
        assert_eq!(f.m(), 5);
    }

    #[test]
    fn invalid_root_counts() {
        let mut rng = RngStream::new(1, 0).rng();
        assert_eq!(sample_uniform_forest(3, 0, &mut rng), Err(ModelError::InvalidRootCount { m: 3, t: 0 }));
        assert_eq!(sample_uniform_forest(3, 4, &mut rng), Err(ModelError::InvalidRootCount { m: 3, t: 4 }));
    }

    #[test]
    fn samples_are_valid_forests() {
        for rep in 0..50 {
            let f = sample_uniform_forest(40, 3, &mut RngStream::new(2, rep).rng()).unwrap();
            let reparsed = RootedForest::from_parents(40, 3, f.nonroot_parents()).unwrap();
            assert_eq!(reparsed, f);
            assert_eq!(f.tree_sizes().iter().sum::<usize>(), 40);
        }
    }
}
