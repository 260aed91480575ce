use rainbow_graphs::graph::{Edge, is_rainbow, is_tree};
use rainbow_graphs::oracles::{
    borel_partial_sum, borel_pmf, enumerate_forests, exact_max_rainbow_tree, exact_mean_bridge_number,
    exact_mean_min_double_bridge, exact_min_deleted_component_expectation,
};
use rainbow_graphs::ColouredGraph;

// Values below are worked out by hand from the few labelled forests involved.

#[test]
fn min_split_expectations_by_hand() {
    assert_eq!(exact_min_deleted_component_expectation(2).unwrap(), 1.0);
    assert_eq!(exact_min_deleted_component_expectation(3).unwrap(), 1.0);
    // 12 paths (mean 4/3) and 4 stars (mean 1)
    assert!((exact_min_deleted_component_expectation(4).unwrap() - 1.25).abs() < 1e-12);
    assert!(exact_min_deleted_component_expectation(8).is_err());
}

#[test]
fn bridge_expectations_by_hand() {
    assert_eq!(exact_mean_bridge_number(3, 2).unwrap(), 1.0);
    assert!((exact_mean_bridge_number(3, 1).unwrap() - 4.0 / 3.0).abs() < 1e-12);
    assert_eq!(exact_mean_min_double_bridge(3, 1).unwrap(), 1.0);
    assert_eq!(exact_mean_min_double_bridge(4, 2).unwrap(), 1.0);
    assert!(exact_mean_bridge_number(4, 4).is_err());
    assert!(exact_mean_min_double_bridge(4, 3).is_err());
}

#[test]
fn enumeration_members_are_distinct_forests() {
    for m in 1..=6 {
        for t in 1..=m {
            let all = enumerate_forests(m, t).unwrap();
            let mut enc = all.encodings.clone();
            enc.dedup();
            assert_eq!(enc.len(), all.count());
            assert!(all.forests.iter().all(|f| f.roots().iter().enumerate().all(|(v, &r)| (r as usize) < t && (v >= t || r as usize == v))));
        }
    }
    assert!(enumerate_forests(9, 1).is_err());
    assert!(enumerate_forests(4, 0).is_err());
}

#[test]
fn borel_law_values() {
    let e = std::f64::consts::E;
    assert!((borel_pmf(1) - 1.0 / e).abs() < 1e-15);
    assert!((borel_pmf(2) - e.powi(-2)).abs() < 1e-15);
    assert!((borel_pmf(3) - 1.5 * e.powi(-3)).abs() < 1e-15);
    assert_eq!(borel_pmf(0), 0.0);
    for k in 1..500 {
        assert!(borel_pmf(k + 1) < borel_pmf(k));
    }
    // the tail decays like k^(-1/2)
    let mass = borel_partial_sum(1_000_000);
    assert!(mass < 1.0 && 1.0 - mass < 1e-3, "{mass}");
    assert!((borel_partial_sum(5) - (1..=5).map(borel_pmf).sum::<f64>()).abs() < 1e-14);
}

#[test]
fn exact_tree_on_hand_made_graphs() {
    // triangle with colours 1,1,2: best is two edges of different colours
    let g = ColouredGraph::new(3, 2, vec![Edge::new(0, 1, 1), Edge::new(1, 2, 1), Edge::new(0, 2, 2)]).unwrap();
    let best = exact_max_rainbow_tree(&g).unwrap();
    assert_eq!(best.len(), 2);
    assert!(is_rainbow(&g, &best) && is_tree(&g, &best));
    // two disjoint rainbow edges sharing a colour: only one survives
    let g = ColouredGraph::new(4, 1, vec![Edge::new(0, 1, 1), Edge::new(2, 3, 1)]).unwrap();
    assert_eq!(exact_max_rainbow_tree(&g).unwrap().len(), 1);
    assert!(exact_max_rainbow_tree(&ColouredGraph::empty(3, 0)).unwrap().is_empty());
}
