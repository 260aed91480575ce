//! Rainbow DFS for long paths, and sprinkling to close a rainbow cycle.
//!
//! `cargo run --release --example rainbow_path_and_cycle -- [n] [d]`

use rainbow_graphs::finders::{find_rainbow_cycle_sprinkled, find_rainbow_cycle_weakly_super, rdfs_longest_path, Mode, RdfsParams};
use rainbow_graphs::models::sample_coloured_gnp;
use rainbow_graphs::RngStream;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(100_000), |s| s.parse())?;
    let d: f64 = args.get(1).map_or(Ok(128.0), |s| s.parse())?;
    let mut rng = RngStream::new(3, 0).rng();

    let g = sample_coloured_gnp(n, d / n as f64, n as u32, &mut rng)?;
    for params in [RdfsParams::faithful(0.5), RdfsParams::greedy()] {
        let path = rdfs_longest_path(&g, &params)?;
        println!(
            "{:?} RDFS: path of length {} after {} queries, stopped by {:?}",
            params.mode,
            path.length(),
            path.queries,
            path.stop
        );
    }

    let run = find_rainbow_cycle_sprinkled(n, n as u32, d + 1.0, 0.5, Mode::Greedy, &mut rng)?;
    println!(
        "sprinkled at p1 = {:.3e}, p2 = {:.3e}: path {}, cycle {:?}",
        run.p1,
        run.p2,
        run.path.length(),
        run.cycle.as_ref().map(|c| c.length())
    );

    let weak = find_rainbow_cycle_weakly_super(n, n as u32, 0.2, &mut rng)?;
    println!("just above criticality (eps = 0.2): cycle {:?}", weak.cycle.as_ref().map(|c| c.length()));
    Ok(())
}
