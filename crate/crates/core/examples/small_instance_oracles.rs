//! Exact answers on small instances, for checking the heuristics.

use rainbow_graphs::finders::{rdfs_longest_path, subcritical_rainbow_tree, RdfsParams};
use rainbow_graphs::models::sample_coloured_gnp;
use rainbow_graphs::oracles::{
    enumerate_forests, exact_max_rainbow_tree, exact_mean_bridge_number, exact_min_deleted_component_expectation,
};
use rainbow_graphs::RngStream;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in 1..=6 {
        let counts: Vec<usize> = (1..=m).map(|t| enumerate_forests(m, t).map(|e| e.count())).collect::<Result<_, _>>()?;
        println!("|F({m}, t)| for t = 1..{m}: {counts:?}");
    }
    for m in 2..=7 {
        println!("m = {m}: E[min split] = {:.5}", exact_min_deleted_component_expectation(m)?);
    }
    println!("E[bridge number] in F(5, 2) = {:.5}", exact_mean_bridge_number(5, 2)?);

    let mut rng = RngStream::new(11, 0).rng();
    for _ in 0..5 {
        let g = sample_coloured_gnp(8, 0.4, 5, &mut rng)?;
        let best = exact_max_rainbow_tree(&g)?;
        let path = rdfs_longest_path(&g, &RdfsParams::greedy())?;
        println!(
            "G_5(8, 0.4) with {} edges: optimum {} vertices, subcritical finder {}, greedy path {}",
            g.edge_count(),
            best.len() + 1,
            subcritical_rainbow_tree(&g).order(),
            path.order()
        );
    }
    Ok(())
}
