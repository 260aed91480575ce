//! Giant-component fraction gamma(d) against simulation.
//!
//! `cargo run --release --example survival_probability -- [n]`

use rainbow_graphs::graph::connected_components;
use rainbow_graphs::models::{expected_colour_fraction, sample_gnp, survival_probability};
use rainbow_graphs::RngStream;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(100_000), |s| s.parse())?;
    println!("{:>6} {:>10} {:>10} {:>12}", "d", "gamma(d)", "simulated", "colour frac");
    for d in [0.5, 1.0, 1.1, 1.5, 2.0, 3.0, 5.0, 20.0] {
        let gamma = survival_probability(d);
        let g = sample_gnp(n, d / n as f64, &mut RngStream::new(1, d.to_bits()).rng())?;
        let giant = connected_components(&g).largest().map_or(0, |(_, s)| s) as f64 / n as f64;
        println!("{d:>6} {gamma:>10.6} {giant:>10.6} {:>12.6}", expected_colour_fraction(1.0, d));
    }
    Ok(())
}
