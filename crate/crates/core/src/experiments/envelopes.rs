//! Pass/fail envelopes for the Monte Carlo suites.
//!
//! The scaling laws being checked are asymptotic, so none of these numbers
//! follow from a formula: they are sanity bands chosen from pilot runs at
//! the default sizes. Bump [`VERSION`] whenever one changes; it is echoed in
//! every output file.

pub const VERSION: u32 = 1;

/// Accepted range for the ratio of mean split sizes at consecutive `m` in a
/// 4x grid (square-root growth predicts 2).
pub const MIN_SPLIT_RATIO: (f64, f64) = (1.6, 2.4);
/// Standard errors allowed between an estimate and an exact enumeration.
pub const EXACT_SIGMAS: f64 = 3.0;
/// Standard errors allowed for the small bridge-number instances.
pub const ENUMERATION_SIGMAS: f64 = 4.0;
/// Multiplicative slack on the one-sided bridge-number bound `m / (t + 1)`.
pub const BRIDGE_SLACK: f64 = 1.05;
/// Absolute tolerance on the root-tree size pmf, checked for `k <= BOREL_KMAX`.
pub const BOREL_TOL: f64 = 0.01;
pub const BOREL_KMAX: u64 = 5;
/// Band for subcritical tree order over `(2 / eps^2) ln(eps^3 n)`.
pub const SUBCRITICAL_RATIO: (f64, f64) = (0.5, 1.5);
/// Required fraction of `2 eps n` for the supercritical pipeline.
pub const SUPERCRITICAL_FRACTION: f64 = 0.7;
/// Relative tolerance for the giant component against `2 eps n`.
pub const GIANT_RELATIVE: f64 = 0.15;
/// Absolute tolerance for the giant fraction against the survival probability.
pub const GIANT_ABSOLUTE: f64 = 0.02;
/// Below criticality the largest component fraction must stay under this.
pub const SMALL_COMPONENT_FRACTION: f64 = 0.01;
/// Fraction of `alpha / (alpha + 1) eps n` a greedy RBFS tree must reach.
pub const RBFS_FRACTION: f64 = 0.8;
/// Constant in front of `eps^2 n` for the weakly supercritical cycle.
pub const WEAK_CYCLE_CONSTANT: f64 = 0.02;
/// Fraction of repetitions that must meet a per-run envelope.
pub const MAJORITY: f64 = 0.8;
pub const STRONG_MAJORITY: f64 = 0.9;
/// Far above criticality the giant fraction must exceed this.
pub const LARGE_GIANT_FRACTION: f64 = 0.99;
