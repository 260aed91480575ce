//! Seeded Monte Carlo suites.
//!
//! Every repetition draws from its own [`RngStream`] keyed by
//! `(seed, parameter point, repetition)`, repetitions fan out over a rayon
//! pool and are collected in index order, so a suite's output depends only
//! on its [`ExperimentConfig`], never on the thread count.

pub mod envelopes;
mod suites;

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::finders::{FinderError, Mode};
use crate::models::ModelError;
use crate::oracles::OracleError;
use crate::rng::{RngStream, SimRng};

pub use suites::{
    exp_bridge_number, exp_cycle, exp_giant_benchmark, exp_min_double_bridge, exp_min_split,
    exp_phase_transition, exp_rbfs_tree, exp_rdfs_path, exp_tree_size_law, exp_weak_cycle,
};

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Finder(#[from] FinderError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("output: {0}")]
    Output(String),
}

impl From<std::io::Error> for ExperimentError {
    fn from(e: std::io::Error) -> Self {
        ExperimentError::Output(e.to_string())
    }
}

impl From<csv::Error> for ExperimentError {
    fn from(e: csv::Error) -> Self {
        ExperimentError::Output(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
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
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::MinSplit,
        Suite::Bridge,
        Suite::DoubleBridge,
        Suite::Borel,
        Suite::Phase,
        Suite::Giant,
        Suite::Path,
        Suite::Rbfs,
        Suite::Cycle,
        Suite::WeakCycle,
    ];

    fn index(self) -> u32 {
        Suite::ALL.iter().position(|&s| s == self).unwrap() as u32
    }
}

/// Parameters of one suite run. Which fields a suite reads:
///
/// | suite | fields |
/// |---|---|
/// | min-split | `m` grid |
/// | bridge | `(m, t)` pairs |
/// | double-bridge | `(m, t)` pairs |
/// | borel | `m[0]`, `t[0]` |
/// | phase | `n`, `c`, `eps` grid (either sign) |
/// | giant | `n`, `d` grid |
/// | path, cycle | `n`, `c`, `d[0]`, `delta`, `mode` |
/// | rbfs | `n`, `c`, `eps[0]`, `mode` |
/// | weak-cycle | `n`, `c`, `eps[0]` |
///
/// `c = None` means `c = n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub suite: Suite,
    pub reps: u32,
    pub seed: u64,
    pub n: usize,
    pub c: Option<u32>,
    pub m: Vec<usize>,
    pub t: Vec<usize>,
    pub eps: Vec<f64>,
    pub d: Vec<f64>,
    pub delta: f64,
    pub mode: Mode,
    pub envelope_version: u32,
}

impl ExperimentConfig {
    /// The desk-scale defaults for `suite`.
    pub fn defaults(suite: Suite) -> Self {
        let base = ExperimentConfig {
            suite,
            reps: 10,
            seed: 1,
            n: 0,
            c: None,
            m: vec![],
            t: vec![],
            eps: vec![],
            d: vec![],
            delta: 0.5,
            mode: Mode::Faithful,
            envelope_version: envelopes::VERSION,
        };
        match suite {
            Suite::MinSplit => ExperimentConfig { reps: 10_000, m: vec![4, 100, 400, 1600], ..base },
            Suite::Bridge => ExperimentConfig { reps: 10_000, m: vec![5, 1000], t: vec![2, 50], ..base },
            Suite::DoubleBridge => ExperimentConfig {
                reps: 10_000,
                m: vec![5, 1000, 10_000, 100_000],
                t: vec![2, 10, 100, 1000],
                ..base
            },
            Suite::Borel => ExperimentConfig { reps: 100_000, m: vec![100_000], t: vec![1000], ..base },
            Suite::Phase => ExperimentConfig { n: 1_000_000, eps: vec![-0.05, 0.05], ..base },
            Suite::Giant => ExperimentConfig { reps: 50, n: 100_000, d: vec![0.5, 2.0, 20.0], ..base },
            Suite::Path => ExperimentConfig { n: 100_000, d: vec![128.0], ..base },
            Suite::Rbfs => ExperimentConfig { n: 1_000_000, eps: vec![0.1], mode: Mode::Greedy, ..base },
            Suite::Cycle => ExperimentConfig { n: 100_000, d: vec![129.0], mode: Mode::Greedy, ..base },
            Suite::WeakCycle => ExperimentConfig { n: 1_000_000, eps: vec![0.2], ..base },
        }
    }

    pub fn colours(&self) -> u32 {
        self.c.unwrap_or(self.n as u32)
    }

    fn require(&self, ok: bool, what: &str) -> Result<(), ExperimentError> {
        if ok {
            Ok(())
        } else {
            Err(ExperimentError::InvalidConfig(format!("{:?}: {what}", self.suite)))
        }
    }

    fn validate(&self) -> Result<(), ExperimentError> {
        self.require(self.reps >= 1, "reps must be positive")?;
        match self.suite {
            Suite::MinSplit => self.require(!self.m.is_empty() && self.m.iter().all(|&m| m >= 2), "need m >= 2"),
            Suite::Bridge | Suite::DoubleBridge | Suite::Borel => {
                self.require(!self.m.is_empty() && self.m.len() == self.t.len(), "need matching m and t lists")?;
                self.require(self.m.iter().zip(&self.t).all(|(&m, &t)| t >= 1 && t <= m), "need 1 <= t <= m")
            }
            Suite::Phase | Suite::Rbfs | Suite::WeakCycle => {
                self.require(self.n >= 1 && self.colours() >= 1, "need n, c >= 1")?;
                self.require(!self.eps.is_empty() && self.eps.iter().all(|e| e.abs() > 0.0 && e.abs() < 1.0), "need 0 < |eps| < 1")
            }
            Suite::Giant => self.require(self.n >= 1 && !self.d.is_empty() && self.d.iter().all(|&d| d >= 0.0), "need n >= 1 and d >= 0"),
            Suite::Path | Suite::Cycle => {
                self.require(self.n >= 2 && self.colours() >= 1 && !self.d.is_empty(), "need n >= 2, c >= 1 and d")?;
                self.require(self.delta > 0.0 && self.delta < 1.0, "need 0 < delta < 1")
            }
        }
    }
}

/// One line of a results table. Parameter columns a suite does not use are
/// left empty.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    pub suite: Suite,
    pub n: Option<usize>,
    pub c: Option<u32>,
    pub m: Option<usize>,
    pub t: Option<usize>,
    pub eps: Option<f64>,
    pub d: Option<f64>,
    pub delta: Option<f64>,
    pub k: Option<u64>,
    /// `ln(|eps|^3 n)`, logged so that envelope misses near criticality can be
    /// attributed.
    pub log_eps3n: Option<f64>,
    pub statistic: String,
    pub mean: f64,
    pub std: f64,
    pub reps: u32,
    pub reference: Option<f64>,
    pub reference_formula: String,
    /// Fraction of repetitions meeting the per-run envelope, if there is one.
    pub success_rate: Option<f64>,
    pub envelope: String,
    pub envelope_pass: Option<bool>,
}

impl SummaryRow {
    fn new(suite: Suite, statistic: &str, samples: &[f64]) -> Self {
        let (mean, std) = mean_std(samples);
        SummaryRow {
            suite,
            n: None,
            c: None,
            m: None,
            t: None,
            eps: None,
            d: None,
            delta: None,
            k: None,
            log_eps3n: None,
            statistic: statistic.into(),
            mean,
            std,
            reps: samples.len() as u32,
            reference: None,
            reference_formula: String::new(),
            success_rate: None,
            envelope: String::new(),
            envelope_pass: None,
        }
    }

    fn reference(mut self, value: f64, formula: &str) -> Self {
        self.reference = Some(value);
        self.reference_formula = formula.into();
        self
    }

    fn envelope(mut self, description: String, pass: bool) -> Self {
        self.envelope = description;
        self.envelope_pass = Some(pass);
        self
    }

    /// Standard error of the mean.
    pub fn sem(&self) -> f64 {
        self.std / (self.reps as f64).sqrt()
    }
}

/// Rows plus one raw JSON record per repetition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteOutput {
    pub config: ExperimentConfig,
    pub rows: Vec<SummaryRow>,
    pub raw: Vec<serde_json::Value>,
}

impl SuiteOutput {
    /// False iff some envelope check failed.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.envelope_pass != Some(false))
    }
}

/// Mean and sample standard deviation, summed in index order.
pub fn mean_std(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (f64::NAN, 0.0);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() == 1 {
        return (mean, 0.0);
    }
    let ss: f64 = xs.iter().map(|x| (x - mean) * (x - mean)).sum();
    (mean, (ss / (n - 1.0)).sqrt())
}

/// Runs `f` once per repetition on its own stream and returns the results in
/// repetition order.
pub(crate) fn par_reps<T, F>(config: &ExperimentConfig, point: u32, f: F) -> Result<Vec<T>, ExperimentError>
where
    T: Send,
    F: Fn(&mut SimRng) -> Result<T, ExperimentError> + Sync,
{
    let group = config.suite.index() << 16 | point;
    (0..config.reps)
        .into_par_iter()
        .map(|rep| f(&mut RngStream::for_rep(config.seed, group, rep).rng()))
        .collect()
}

pub fn run_suite(config: &ExperimentConfig) -> Result<SuiteOutput, ExperimentError> {
    config.validate()?;
    let (rows, raw) = match config.suite {
        Suite::MinSplit => exp_min_split(config)?,
        Suite::Bridge => exp_bridge_number(config)?,
        Suite::DoubleBridge => exp_min_double_bridge(config)?,
        Suite::Borel => exp_tree_size_law(config)?,
        Suite::Phase => exp_phase_transition(config)?,
        Suite::Giant => exp_giant_benchmark(config)?,
        Suite::Path => exp_rdfs_path(config)?,
        Suite::Rbfs => exp_rbfs_tree(config)?,
        Suite::Cycle => exp_cycle(config)?,
        Suite::WeakCycle => exp_weak_cycle(config)?,
    };
    Ok(SuiteOutput { config: config.clone(), rows, raw })
}

/// Runs `config` on a pool of `threads` workers (all cores when `None`).
pub fn run_suite_with_threads(config: &ExperimentConfig, threads: Option<usize>) -> Result<SuiteOutput, ExperimentError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| ExperimentError::InvalidConfig(e.to_string()))?;
    pool.install(|| run_suite(config))
}

/// Writes the CSV table: a `# ` line holding the configs as JSON, then a
/// header and one line per row.
pub fn write_csv<W: Write>(outputs: &[SuiteOutput], mut out: W) -> Result<(), ExperimentError> {
    let configs: Vec<&ExperimentConfig> = outputs.iter().map(|o| &o.config).collect();
    let echo = serde_json::to_string(&configs).map_err(|e| ExperimentError::Output(e.to_string()))?;
    writeln!(out, "# {echo}")?;
    let mut w = csv::Writer::from_writer(out);
    for row in outputs.iter().flat_map(|o| &o.rows) {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes every configuration with its rows and raw per-repetition records.
pub fn write_raw_json<W: Write>(outputs: &[SuiteOutput], out: W) -> Result<(), ExperimentError> {
    serde_json::to_writer_pretty(out, outputs).map_err(|e| ExperimentError::Output(e.to_string()))
}
