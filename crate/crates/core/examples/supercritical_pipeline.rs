//! The core/forest pipeline above the phase transition, with its report.
//!
//! `cargo run --release --example supercritical_pipeline -- [n] [eps] [seed]`

use rainbow_graphs::finders::supercritical_rainbow_tree;
use rainbow_graphs::models::sample_coloured_gnp;
use rainbow_graphs::RngStream;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(1_000_000), |s| s.parse())?;
    let eps: f64 = args.get(1).map_or(Ok(0.05), |s| s.parse())?;
    let seed: u64 = args.get(2).map_or(Ok(1), |s| s.parse())?;
    let g = sample_coloured_gnp(n, (1.0 + eps) / n as f64, n as u32, &mut RngStream::new(seed, 0).rng())?;
    let (tree, report) = supercritical_rainbow_tree(&g)?;
    println!("giant {} (2 eps n = {:.0}), 2-core {} vertices", report.component_order, 2.0 * eps * n as f64, report.core_order);
    println!("core edges with repeated colours: {}", report.non_unique_core_edges);
    println!("largest rainbow core piece: {} vertices, {} colours", report.hat_core_order, report.colour_set_size);
    println!("forest vertices lost per step: {} / {} / {} / {}", report.x1, report.x2, report.x3, report.x4);
    println!("colours used exactly twice in the forest: {}", report.double_colour_choices.len());
    println!("rainbow tree: {} vertices", tree.order());
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
