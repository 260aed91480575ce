//! Uniform rooted forests F(m, t): sampling, bridge numbers, root tree sizes.
//!
//! `cargo run --release --example uniform_forests -- [m] [t] [samples]`

use rand::Rng;
use rainbow_graphs::graph::bridge_number;
use rainbow_graphs::models::sample_uniform_forest;
use rainbow_graphs::oracles::borel_pmf;
use rainbow_graphs::RngStream;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let m: usize = args.first().map_or(Ok(10_000), |s| s.parse())?;
    let t: usize = args.get(1).map_or(Ok(100), |s| s.parse())?;
    let samples: usize = args.get(2).map_or(Ok(2000), |s| s.parse())?;
    let mut rng = RngStream::new(7, 0).rng();

    let small = sample_uniform_forest(8, 2, &mut rng)?;
    println!("a forest in F(8, 2), parent form: {small}");

    let mut bridge_total = 0.0;
    let mut root_sizes = [0usize; 6];
    for _ in 0..samples {
        let f = sample_uniform_forest(m, t, &mut rng)?;
        let e = f.edge_above(rng.random_range(t..m) as u32).expect("non-root vertex");
        bridge_total += bridge_number(&f, e)? as f64;
        let s = f.tree_sizes()[0];
        if s < root_sizes.len() {
            root_sizes[s] += 1;
        }
    }
    println!("F({m}, {t}): mean bridge number {:.3} (m/(t+1) = {:.3})", bridge_total / samples as f64, m as f64 / (t + 1) as f64);
    println!("size of the tree of root 0 against the Borel law:");
    for (k, &hits) in root_sizes.iter().enumerate().skip(1) {
        println!("  k = {k}: {:.4}  vs  {:.4}", hits as f64 / samples as f64, borel_pmf(k as u64));
    }
    Ok(())
}
