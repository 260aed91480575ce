//! Coloured G(n, p) and the configuration model.
//!
//! `cargo run --release --example sample_graphs -- [n] [d] [seed]`

use rainbow_graphs::graph::connected_components;
use rainbow_graphs::models::{sample_coloured_gnp, sample_configuration, DegreeSequence};
use rainbow_graphs::RngStream;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(100_000), |s| s.parse())?;
    let d: f64 = args.get(1).map_or(Ok(1.5), |s| s.parse())?;
    let seed: u64 = args.get(2).map_or(Ok(1), |s| s.parse())?;
    let mut rng = RngStream::new(seed, 0).rng();

    let g = sample_coloured_gnp(n, d / n as f64, n as u32, &mut rng)?;
    let parts = connected_components(&g);
    let (_, giant) = parts.largest().unwrap_or((0, 0));
    println!("G_c({n}, {d}/n), c = n: {} edges, {} components, largest {giant}", g.edge_count(), parts.count());

    let mut distinct: Vec<u32> = g.edges().iter().map(|e| e.colour).collect();
    distinct.sort_unstable();
    distinct.dedup();
    println!("  {} distinct colours on {} edges", distinct.len(), g.edge_count());

    // a 3-regular-ish sequence, loops and parallel edges allowed
    let degrees: Vec<usize> = (0..1000).map(|i| 2 + i % 3).collect();
    let mut degrees = degrees;
    if degrees.iter().sum::<usize>() % 2 == 1 {
        degrees[0] += 1;
    }
    let cm = sample_configuration(&DegreeSequence::new(degrees)?, &mut rng);
    let loops = cm.edges().iter().filter(|e| e.is_loop()).count();
    println!("configuration model: {} edges, {loops} loops, multigraph = {}", cm.edge_count(), cm.is_multigraph());
    Ok(())
}
