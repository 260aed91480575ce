//! Rainbow BFS, faithful and greedy, on G_c(n, (1 + eps)/n).
//!
//! `cargo run --release --example rbfs_exploration -- [n] [eps] [alpha]`

use rainbow_graphs::finders::{rbfs_forest, Mode, RbfsParams};
use rainbow_graphs::models::sample_coloured_gnp;
use rainbow_graphs::RngStream;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(1_000_000), |s| s.parse())?;
    let eps: f64 = args.get(1).map_or(Ok(0.1), |s| s.parse())?;
    let alpha: f64 = args.get(2).map_or(Ok(1.0), |s| s.parse())?;
    let c = (alpha * n as f64).round() as u32;
    let mut rng = RngStream::new(5, 0).rng();
    let g = sample_coloured_gnp(n, (1.0 + eps) / n as f64, c, &mut rng)?;
    let reference = alpha / (alpha + 1.0) * eps * n as f64;
    for mode in [Mode::Faithful, Mode::Greedy] {
        let params = RbfsParams::for_epsilon(mode, alpha, eps);
        let tree = rbfs_forest(&g, &params, &mut rng)?;
        println!(
            "{mode:?} (delta = {:.4}): tree of order {} ({:.2} of alpha/(alpha+1) eps n), {} queries, stop {:?}",
            params.delta,
            tree.order(),
            tree.order() as f64 / reference,
            tree.queries,
            tree.stop
        );
    }
    Ok(())
}
