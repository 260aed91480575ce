//! Largest rainbow tree below the phase transition.
//!
//! `cargo run --release --example subcritical_tree -- [n] [eps]` with `eps < 0`.

use rainbow_graphs::finders::subcritical_rainbow_tree;
use rainbow_graphs::graph::connected_components;
use rainbow_graphs::models::sample_coloured_gnp;
use rainbow_graphs::RngStream;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(1_000_000), |s| s.parse())?;
    let eps: f64 = args.get(1).map_or(Ok(-0.05), |s| s.parse())?;
    let reference = 2.0 / (eps * eps) * (eps.abs().powi(3) * n as f64).ln();
    for seed in 0..3 {
        let g = sample_coloured_gnp(n, (1.0 + eps) / n as f64, n as u32, &mut RngStream::new(seed, 0).rng())?;
        let largest = connected_components(&g).largest().map_or(0, |(_, s)| s);
        let tree = subcritical_rainbow_tree(&g);
        println!(
            "seed {seed}: largest component {largest}, rainbow tree {} ({:.2} of (2/eps^2) ln(eps^3 n) = {reference:.0})",
            tree.order(),
            tree.order() as f64 / reference
        );
    }
    Ok(())
}
