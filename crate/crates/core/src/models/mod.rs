//! Random samplers: binomial random graphs, uniform colourings, the
//! configuration model and uniform rooted forests, plus the Poisson
//! branching-process quantities they are benchmarked against.

mod branching;
mod configuration;
mod forest;
mod gnp;

use thiserror::Error;

pub use branching::{expected_colour_fraction, survival_probability};
pub use configuration::{sample_configuration, DegreeSequence};
pub use forest::sample_uniform_forest;
pub use gnp::{colour_uniform, sample_coloured_gnp, sample_gnp};

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("edge probability {0} is not in [0, 1]")]
    InvalidProbability(f64),
    #[error("colour count must be at least 1")]
    InvalidColourCount,
    #[error("degree sum {0} is odd")]
    OddDegreeSum(usize),
    #[error("root count t = {t} must satisfy 1 <= t <= m = {m}")]
    InvalidRootCount { m: usize, t: usize },
}
