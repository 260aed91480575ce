//! Runs an experiment suite at small scale and prints its CSV.
//!
//! `cargo run --release --example monte_carlo_suite -- [suite] [reps]`

use clap::ValueEnum;
use rainbow_graphs::experiments::{run_suite, write_csv, ExperimentConfig, Suite};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let suite = match args.first() {
        Some(name) => Suite::from_str(name, true)?,
        None => Suite::Giant,
    };
    let reps: u32 = args.get(1).map_or(Ok(20), |s| s.parse())?;
    let mut cfg = ExperimentConfig::defaults(suite);
    cfg.reps = reps;
    cfg.n = cfg.n.min(100_000);
    let out = run_suite(&cfg)?;
    write_csv(std::slice::from_ref(&out), std::io::stdout().lock())?;
    eprintln!("{:?}: envelopes {}", suite, if out.passed() { "pass" } else { "fail" });
    Ok(())
}
