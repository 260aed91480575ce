//! The `rainbow` command line: `gen`, `find` and `experiment`.
//!
//! Exit codes: 0 success, 1 an experiment envelope failed, 2 the finder
//! found nothing (`NotFound` or `EmptyCore`), 64 usage errors, 74 I/O
//! errors. Every command is a deterministic function of its flags and input
//! files; wall-clock times are only reported under `--timing`.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::experiments::{self, ExperimentConfig, Suite, SuiteOutput};
use crate::finders::{
    find_rainbow_cycle_sprinkled, find_rainbow_cycle_weakly_super, rbfs_forest, rdfs_longest_path,
    sprinkle_close_cycle, subcritical_rainbow_tree, supercritical_rainbow_tree, FinderError, Mode, RbfsParams,
    RdfsParams,
};
use crate::graph::{connected_components, read_edge_list, write_edge_list, ColouredGraph};
use crate::models::{colour_uniform, sample_configuration, sample_gnp, sample_uniform_forest, DegreeSequence};
use crate::rng::RngStream;

pub const EXIT_ENVELOPE: i32 = 1;
pub const EXIT_NOT_FOUND: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Random coloured graphs and rainbow structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a graph (or forest) and write it out.
    Gen(GenArgs),
    /// Run a rainbow finder on a sampled or loaded graph.
    Find(FindArgs),
    /// Run a Monte Carlo suite and write a CSV summary.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
enum Model {
    Gnp,
    Configuration,
    Forest,
}

/// Parameters of a coloured `G(n, p)`; exactly one of `--p`, `--eps`, `--d`.
#[derive(Debug, Clone, Args)]
struct GnpArgs {
    /// Number of vertices.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability.
    #[arg(long, group = "density")]
    p: Option<f64>,
    /// Sets p = (1 + eps) / n.
    #[arg(long, group = "density", allow_hyphen_values = true)]
    eps: Option<f64>,
    /// Sets p = d / n.
    #[arg(long, group = "density")]
    d: Option<f64>,
    /// Number of colours; 0 leaves the graph uncoloured.
    #[arg(long, default_value_t = 0)]
    c: u32,
    /// Master seed.
    #[arg(long, env = "RAINBOW_SEED", default_value_t = 1)]
    seed: u64,
}

impl GnpArgs {
    fn probability(&self) -> Result<(usize, f64), String> {
        let n = self.n.ok_or("--n is required")?;
        let nf = n.max(1) as f64;
        match (self.p, self.eps, self.d) {
            (Some(p), _, _) => Ok((n, p)),
            (_, Some(eps), _) => Ok((n, (1.0 + eps) / nf)),
            (_, _, Some(d)) => Ok((n, d / nf)),
            _ => Err("one of --p, --eps, --d is required".into()),
        }
    }

    fn sample(&self) -> Result<ColouredGraph, CliError> {
        let (n, p) = self.probability().map_err(CliError::Usage)?;
        let mut rng = RngStream::new(self.seed, 0).rng();
        let g = sample_gnp(n, p, &mut rng).map_err(|e| CliError::Usage(e.to_string()))?;
        if self.c == 0 {
            Ok(g)
        } else {
            colour_uniform(&g, self.c, &mut rng).map_err(|e| CliError::Usage(e.to_string()))
        }
    }

    fn echo(&self) -> Value {
        let (n, p) = self.probability().unwrap_or((0, f64::NAN));
        json!({"n": n, "p": p, "eps": self.eps, "d": self.d, "c": self.c, "seed": self.seed})
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value_t = Model::Gnp)]
    model: Model,
    #[command(flatten)]
    gnp: GnpArgs,
    /// Degree sequence for the configuration model, comma separated.
    #[arg(long, value_delimiter = ',')]
    degrees: Vec<usize>,
    /// Forest size.
    #[arg(long)]
    m: Option<usize>,
    /// Forest root count.
    #[arg(long)]
    t: Option<usize>,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
enum Finder {
    Sub,
    Super,
    Rdfs,
    Rbfs,
    Cycle,
}

#[derive(Debug, Args)]
struct FindArgs {
    #[arg(long, value_enum)]
    finder: Finder,
    /// Edge-list file to search instead of sampling.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Second-round edge list for `--finder cycle` on an input file.
    #[arg(long, requires = "input")]
    sprinkle: Option<PathBuf>,
    #[command(flatten)]
    gnp: GnpArgs,
    #[arg(long, value_enum, default_value_t = Mode::Faithful)]
    mode: Mode,
    /// Slack parameter of the RDFS/RBFS/cycle finders.
    #[arg(long, default_value_t = 0.5)]
    delta: f64,
    /// Overrides the RDFS query budget.
    #[arg(long)]
    budget: Option<u64>,
    /// Report wall-clock time (makes the output non-reproducible).
    #[arg(long)]
    timing: bool,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    MinSplit,
    Bridge,
    DoubleBridge,
    Borel,
    Phase,
    Giant,
    Path,
    Rbfs,
    Cycle,
    WeakCycle,
    All,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    /// Repetitions per parameter point (suite default when absent).
    #[arg(long)]
    reps: Option<u32>,
    #[arg(long, env = "RAINBOW_SEED", default_value_t = 1)]
    seed: u64,
    /// Worker threads (all cores when absent); results do not depend on it.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    c: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    t: Vec<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    eps: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    d: Vec<f64>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// CSV output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write every per-repetition record as JSON here.
    #[arg(long)]
    raw: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    NotFound(String),
    Io(String),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    run(std::env::args_os())
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(&a),
        Command::Find(a) => cmd_find(&a),
        Command::Experiment(a) => cmd_experiment(&a),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::NotFound(msg)) => {
            eprintln!("{msg}");
            EXIT_NOT_FOUND
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            EXIT_IO
        }
    }
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load(path: &PathBuf) -> Result<ColouredGraph, CliError> {
    let file = File::open(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    read_edge_list(BufReader::new(file)).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn cmd_gen(a: &GenArgs) -> Result<i32, CliError> {
    let mut out = output(&a.out)?;
    let summary = match a.model {
        Model::Gnp => {
            let g = a.gnp.sample()?;
            write_edge_list(&g, &mut out).map_err(|e| CliError::Io(e.to_string()))?;
            json!({"command": "gen", "model": a.model, "config": a.gnp.echo(),
                   "n": g.n(), "edges": g.edge_count(), "components": connected_components(&g).count()})
        }
        Model::Configuration => {
            let d = DegreeSequence::new(a.degrees.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
            let g = sample_configuration(&d, &mut RngStream::new(a.gnp.seed, 0).rng());
            write_edge_list(&g, &mut out).map_err(|e| CliError::Io(e.to_string()))?;
            json!({"command": "gen", "model": a.model, "config": {"degrees": a.degrees, "seed": a.gnp.seed},
                   "n": g.n(), "edges": g.edge_count(), "components": connected_components(&g).count()})
        }
        Model::Forest => {
            let (m, t) = (a.m.ok_or(CliError::Usage("--m is required".into()))?, a.t.unwrap_or(1));
            let f = sample_uniform_forest(m, t, &mut RngStream::new(a.gnp.seed, 0).rng())
                .map_err(|e| CliError::Usage(e.to_string()))?;
            writeln!(out, "{f}")?;
            json!({"command": "gen", "model": a.model, "config": {"m": m, "t": t, "seed": a.gnp.seed},
                   "edges": f.edge_count(), "tree_sizes_max": f.tree_sizes().into_iter().max()})
        }
    };
    out.flush()?;
    if a.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}

fn not_found(e: FinderError) -> CliError {
    match e {
        FinderError::EmptyCore | FinderError::NotFound => CliError::NotFound(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn cmd_find(a: &FindArgs) -> Result<i32, CliError> {
    let start = Instant::now();
    let source = match &a.input {
        Some(p) => json!({"input": p.display().to_string(), "sprinkle": a.sprinkle.as_ref().map(|s| s.display().to_string())}),
        None => a.gnp.echo(),
    };
    let params = json!({"mode": a.mode, "delta": a.delta, "budget": a.budget, "eps": a.gnp.eps, "source": source});
    let mut record = json!({"finder": a.finder, "params": params, "seed": a.gnp.seed});

    let result = if a.finder == Finder::Cycle {
        find_cycle(a)?
    } else {
        let g = match &a.input {
            Some(p) => load(p)?,
            None => a.gnp.sample()?,
        };
        find_in_graph(a, &g)?
    };
    for (k, v) in result.as_object().into_iter().flatten() {
        record[k] = v.clone();
    }
    record["wall_time_ms"] = if a.timing { json!(start.elapsed().as_secs_f64() * 1e3) } else { Value::Null };
    let mut out = output(&a.out)?;
    serde_json::to_writer(&mut out, &record).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out)?;
    out.flush()?;
    Ok(0)
}

fn find_in_graph(a: &FindArgs, g: &ColouredGraph) -> Result<Value, CliError> {
    Ok(match a.finder {
        Finder::Sub => {
            let t = subcritical_rainbow_tree(g);
            json!({"order": t.order(), "edges": t.edges})
        }
        Finder::Super => {
            let (t, report) = supercritical_rainbow_tree(g).map_err(not_found)?;
            json!({"order": t.order(), "edges": t.edges, "report": report})
        }
        Finder::Rdfs => {
            let params = match a.mode {
                Mode::Faithful => RdfsParams { query_budget: a.budget, ..RdfsParams::faithful(a.delta) },
                Mode::Greedy => RdfsParams { query_budget: a.budget, ..RdfsParams::greedy() },
            };
            let tr = rdfs_longest_path(g, &params).map_err(not_found)?;
            json!({"length": tr.length(), "order": tr.order(), "queries": tr.queries, "accepted": tr.accepted,
                   "stop": tr.stop, "path": tr.vertices})
        }
        Finder::Rbfs => {
            let params = RbfsParams { mode: a.mode, delta: a.delta, epsilon: a.gnp.eps.unwrap_or(0.0) };
            let tr = rbfs_forest(g, &params, &mut RngStream::new(a.gnp.seed, 1).rng()).map_err(not_found)?;
            json!({"order": tr.order(), "queries": tr.queries, "accepted": tr.accepted, "stop": tr.stop, "edges": tr.edges})
        }
        Finder::Cycle => unreachable!("handled by find_cycle"),
    })
}

fn find_cycle(a: &FindArgs) -> Result<Value, CliError> {
    let cycle_json = |path_len: usize, cycle: &crate::finders::RainbowCycle| {
        json!({"path_length": path_len, "length": cycle.length(), "cycle": cycle.vertices, "closing_edge": cycle.closing})
    };
    if let Some(input) = &a.input {
        let g1 = load(input)?;
        let g2 = load(a.sprinkle.as_ref().ok_or(CliError::Usage("--sprinkle is required with --input".into()))?)?;
        let params = match a.mode {
            Mode::Faithful => RdfsParams::faithful(a.delta / 2.0),
            Mode::Greedy => RdfsParams::greedy(),
        };
        let path = rdfs_longest_path(&g1, &params).map_err(not_found)?;
        let cycle = sprinkle_close_cycle(&g1, &path.vertices, &path.edges, &g2, a.delta).map_err(not_found)?;
        return Ok(cycle_json(path.length(), &cycle));
    }
    let n = a.gnp.n.ok_or(CliError::Usage("--n is required".into()))?;
    let c = if a.gnp.c == 0 { n as u32 } else { a.gnp.c };
    let mut rng = RngStream::new(a.gnp.seed, 0).rng();
    let out = match (a.gnp.d, a.gnp.eps) {
        (Some(d), _) => find_rainbow_cycle_sprinkled(n, c, d, a.delta, a.mode, &mut rng),
        (None, Some(eps)) => find_rainbow_cycle_weakly_super(n, c, eps, &mut rng),
        _ => return Err(CliError::Usage("--finder cycle needs --d or --eps".into())),
    }
    .map_err(not_found)?;
    let cycle = out.cycle.ok_or_else(|| not_found(FinderError::NotFound))?;
    let mut v = cycle_json(out.path.length(), &cycle);
    v["p1"] = json!(out.p1);
    v["p2"] = json!(out.p2);
    Ok(v)
}

fn resolve(a: &ExperimentArgs, suite: Suite) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::defaults(suite);
    cfg.seed = a.seed;
    if let Some(r) = a.reps {
        cfg.reps = r;
    }
    if let Some(n) = a.n {
        cfg.n = n;
    }
    if a.c.is_some() {
        cfg.c = a.c;
    }
    if !a.m.is_empty() {
        cfg.m = a.m.clone();
    }
    if !a.t.is_empty() {
        cfg.t = a.t.clone();
    }
    if !a.eps.is_empty() {
        cfg.eps = a.eps.clone();
    }
    if !a.d.is_empty() {
        cfg.d = a.d.clone();
    }
    if let Some(delta) = a.delta {
        cfg.delta = delta;
    }
    if let Some(mode) = a.mode {
        cfg.mode = mode;
    }
    cfg
}

fn cmd_experiment(a: &ExperimentArgs) -> Result<i32, CliError> {
    let suites: Vec<Suite> = match a.suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        one => vec![Suite::ALL[one as usize]],
    };
    let mut outputs: Vec<SuiteOutput> = Vec::new();
    for suite in suites {
        let cfg = resolve(a, suite);
        let out = experiments::run_suite_with_threads(&cfg, a.threads).map_err(|e| match e {
            experiments::ExperimentError::Output(m) => CliError::Io(m),
            other => CliError::Usage(other.to_string()),
        })?;
        eprintln!("{:?}: {}", suite, if out.passed() { "all envelopes passed" } else { "ENVELOPE FAILURE" });
        outputs.push(out);
    }
    let mut out = output(&a.out)?;
    experiments::write_csv(&outputs, &mut out).map_err(|e| CliError::Io(e.to_string()))?;
    out.flush()?;
    if let Some(raw) = &a.raw {
        let mut w = BufWriter::new(File::create(raw)?);
        experiments::write_raw_json(&outputs, &mut w).map_err(|e| CliError::Io(e.to_string()))?;
        writeln!(w)?;
        w.flush()?;
    }
    Ok(if outputs.iter().all(SuiteOutput::passed) { 0 } else { EXIT_ENVELOPE })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_args_line_up_with_suites() {
        for (i, s) in Suite::ALL.iter().enumerate() {
            let arg = SuiteArg::value_variants()[i];
            assert_eq!(arg.to_possible_value().unwrap().get_name(), s.to_possible_value().unwrap().get_name());
        }
    }

    #[test]
    fn usage_errors_exit_64() {
        assert_eq!(run(["rainbow", "experiment", "--suite", "nonsense"]), EXIT_USAGE);
        assert_eq!(run(["rainbow", "gen", "--n", "5", "--p", "0.1", "--d", "2"]), EXIT_USAGE);
        assert_eq!(run(["rainbow", "frobnicate"]), EXIT_USAGE);
    }

    #[test]
    fn help_lists_defaults() {
        let help = Cli::try_parse_from(["rainbow", "find", "--help"]).unwrap_err().to_string();
        assert!(help.contains("--delta") && help.contains("[default: 0.5]"));
    }
}
