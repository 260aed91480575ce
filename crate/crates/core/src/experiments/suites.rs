use rand::Rng;
use serde_json::{json, Value};

use super::envelopes as env;
use super::{par_reps, ExperimentConfig, ExperimentError, SummaryRow};
use crate::finders::{
    find_rainbow_cycle_sprinkled, find_rainbow_cycle_weakly_super, rbfs_forest, rdfs_longest_path,
    subcritical_rainbow_tree, supercritical_rainbow_tree, FinderError, Mode, RbfsParams, RdfsParams,
};
use crate::graph::connected_components;
use crate::models::{sample_coloured_gnp, sample_gnp, sample_uniform_forest, survival_probability};
use crate::oracles::{
    borel_pmf, exact_mean_bridge_number, exact_mean_min_double_bridge, exact_min_deleted_component_expectation,
};

type Tables = (Vec<SummaryRow>, Vec<Value>);

fn rate(flags: impl IntoIterator<Item = bool>) -> f64 {
    let (mut hit, mut all) = (0usize, 0usize);
    for f in flags {
        hit += f as usize;
        all += 1;
    }
    hit as f64 / all.max(1) as f64
}

/// `|mean - exact| <= sigmas * sem`, with exact equality demanded when the
/// sample has no spread.
fn agrees(row: &SummaryRow, exact: f64, sigmas: f64) -> bool {
    (row.mean - exact).abs() <= sigmas * row.sem() + 1e-12
}

fn raw_values(cfg: &ExperimentConfig, point: Value, values: &[f64]) -> Vec<Value> {
    values
        .iter()
        .enumerate()
        .map(|(rep, v)| json!({"suite": cfg.suite, "point": point, "rep": rep, "value": v}))
        .collect()
}

/// Smaller side of a uniform forest tree `F(m, 1)` split at a uniform edge.
pub fn exp_min_split(cfg: &ExperimentConfig) -> Result<Tables, ExperimentError> {
    let mut rows: Vec<SummaryRow> = Vec::new();
    let mut raw = Vec::new();
    for (i, &m) in cfg.m.iter().enumerate() {
        let xs = par_reps(cfg, i as u32, |rng| {
            let f = sample_uniform_forest(m, 1, rng)?;
            let w = rng.random_range(1..m);
            let b = f.subtree_sizes()[w];
            Ok(b.min(m - b) as f64)
        })?;
        raw.extend(raw_values(cfg, json!({"m": m}), &xs));
        let mut row = SummaryRow { m: Some(m), t: Some(1), ..SummaryRow::new(cfg.suite, "min_split", &xs) };
        if m <= 7 {
            let exact = exact_min_deleted_component_expectation(m)?;
            let pass = agrees(&row, exact, env::EXACT_SIGMAS);
            row = row.reference(exact, "exact enumeration").envelope(format!("within {} sem of exact", env::EXACT_SIGMAS), pass);
        } else {
            row = row.reference((m as f64).sqrt(), "sqrt(m)");
            if let Some(prev) = rows.last().filter(|p| p.m.is_some_and(|pm| pm > 7 && 4 * pm == m)) {
                let ratio = row.mean / prev.mean;
                let (lo, hi) = env::MIN_SPLIT_RATIO;
                row = row.envelope(
                    format!("mean ratio to m/4 = {ratio:.4} in [{lo}, {hi}]"),
                    (lo..=hi).contains(&ratio),
                );
            }
        }
        rows.push(row);
    }
    Ok((rows, raw))
}

/// Bridge number of a uniform edge of `F(m, t)`.
pub fn exp_bridge_number(cfg: &ExperimentConfig) -> Result<Tables, ExperimentError> {
    let mut rows = Vec::new();
    let mut raw = Vec::new();
    for (i, (&m, &t)) in cfg.m.iter().zip(&cfg.t).enumerate() {
        if m == t {
            return Err(ExperimentError::InvalidConfig(format!("F({m}, {t}) has no edges")));
        }
        let xs = par_reps(cfg, i as u32, |rng| {
            let f = sample_uniform_forest(m, t, rng)?;
            let w = rng.random_range(t..m);
            Ok(f.subtree_sizes()[w] as f64)
        })?;
        raw.extend(raw_values(cfg, json!({"m": m, "t": t}), &xs));
        let bound = m as f64 / (t as f64 + 1.0);
        let row = SummaryRow { m: Some(m), t: Some(t), ..SummaryRow::new(cfg.suite, "bridge_number", &xs) };
        let mut pass = row.mean <= env::BRIDGE_SLACK * bound;
        let mut text = format!("mean <= {} * m/(t+1)", env::BRIDGE_SLACK);
        if m <= 8 {
            pass &= agrees(&row, exact_mean_bridge_number(m, t)?, env::ENUMERATION_SIGMAS);
            text += &format!("; within {} sem of exact", env::ENUMERATION_SIGMAS);
        }
        rows.push(row.reference(bound, "m/(t+1)").envelope(text, pass));
    }
    Ok((rows, raw))
}

/// Smaller bridge number of two distinct uniform edges of `F(m, t)`.
pub fn exp_min_double_bridge(cfg: &ExperimentConfig) -> Result<Tables, ExperimentError> {
    let mut rows: Vec<SummaryRow> = Vec::new();
    let mut raw = Vec::new();
    let mut previous_normalised: Option<f64> = None;
    for (i, (&m, &t)) in cfg.m.iter().zip(&cfg.t).enumerate() {
        if m < t + 2 {
            return Err(ExperimentError::InvalidConfig(format!("F({m}, {t}) has fewer than two edges")));
        }
        let xs = par_reps(cfg, i as u32, |rng| {
            let f = sample_uniform_forest(m, t, rng)?;
            let a = rng.random_range(t..m);
            let mut b = rng.random_range(t..m - 1);
            if b >= a {
                b += 1;
            }
            let sizes = f.subtree_sizes();
            Ok(sizes[a].min(sizes[b]) as f64)
        })?;
        raw.extend(raw_values(cfg, json!({"m": m, "t": t}), &xs));
        let scale = t as f64 / m as f64;
        let mut row = SummaryRow { m: Some(m), t: Some(t), ..SummaryRow::new(cfg.suite, "min_double_bridge", &xs) }
            .reference(m as f64 / t as f64, "m/t");
        if m <= 8 {
            let pass = agrees(&row, exact_mean_min_double_bridge(m, t)?, env::ENUMERATION_SIGMAS);
            row = row.envelope(format!("within {} sem of exact", env::ENUMERATION_SIGMAS), pass);
        }
        rows.push(row);

        let scaled: Vec<f64> = xs.iter().map(|x| x * scale).collect();
        let mut norm = SummaryRow { m: Some(m), t: Some(t), ..SummaryRow::new(cfg.suite, "normalised_min_double_bridge", &scaled) };
        if m == 100 * t {
            if let Some(prev) = previous_normalised {
                let pass = norm.mean < prev;
                norm = norm.envelope(format!("strictly below previous {prev:.6}"), pass);
            }
            previous_normalised = Some(norm.mean);
        }
        rows.push(norm);
    }
    Ok((rows, raw))
}

/// Order of the tree of root 0 in `F(m, t)` against the Borel law.
pub fn exp_tree_size_law(cfg: &ExperimentConfig) -> Result<Tables, ExperimentError> {
    let (m, t) = (cfg.m[0], cfg.t[0]);
    let sizes = par_reps(cfg, 0, |rng| Ok(sample_uniform_forest(m, t, rng)?.tree_sizes()[0] as u64))?;
    let raw = sizes
        .iter()
        .enumerate()
        .map(|(rep, s)| json!({"suite": cfg.suite, "point": {"m": m, "t": t}, "rep": rep, "value": s}))
        .collect();
    let mut rows = Vec::new();
    for k in 1..=2 * env::BOREL_KMAX {
        let hits: Vec<f64> = sizes.iter().map(|&s| (s == k) as u8 as f64).collect();
        let reference = borel_pmf(k);
        let mut row = SummaryRow { m: Some(m), t: Some(t), k: Some(k), ..SummaryRow::new(cfg.suite, "root_tree_pmf", &hits) }
            .reference(reference, "exp(-k) k^(k-1) / k!");
        if k <= env::BOREL_KMAX {
            let pass = (row.mean - reference).abs() <= env::BOREL_TOL;
            row = row.envelope(format!("|p - borel| <= {}", env::BOREL_TOL), pass);
        }
        rows.push(row);
    }
    Ok((rows, raw))
}

/// Largest rainbow tree near the phase transition, `p = (1 + eps) / n`.
pub fn exp_phase_transition(cfg: &ExperimentConfig) -> Result<Tables, ExperimentError> {
    let (n, c) = (cfg.n, cfg.colours());
    let nf = n as f64;
    let mut rows = Vec::new();
    let mut raw = Vec::new();
    for (i, &eps) in cfg.eps.iter().enumerate() {
        let p = ((1.0 + eps) / nf).min(1.0);
        let runs = par_reps(cfg, i as u32, |rng| {
            let g = sample_coloured_gnp(n, p, c, rng)?;
            let largest = connected_components(&g).largest().map_or(0, |(_, s)| s);
            if eps < 0.0 {
                let tree = subcritical_rainbow_tree(&g);
                return Ok((largest, tree.order(), json!({"finder": "sub", "order": tree.order(), "largest_component": largest})));
            }
            match supercritical_rainbow_tree(&g) {
                Ok((tree, report)) => Ok((
                    largest,
                    tree.order(),
                    json!({"finder": "super", "order": tree.order(), "largest_component": largest, "report": report}),
                )),
                Err(FinderError::EmptyCore) => {
                    let tree = subcritical_rainbow_tree(&g);
                    Ok((largest, tree.order(), json!({"finder": "sub", "empty_core": true, "order": tree.order(), "largest_component": largest})))
                }
                Err(e) => Err(e.into()),
            }
        })?;
        for (rep, (_, _, record)) in runs.iter().enumerate() {
            raw.push(json!({"suite": cfg.suite, "point": {"n": n, "c": c, "eps": eps}, "rep": rep, "value": record}));
        }
        let log_eps3n = (eps.abs().powi(3) * nf).ln();
        let point = |row: SummaryRow| SummaryRow {
            n: Some(n),
            c: Some(c),
            eps: Some(eps),
            log_eps3n: Some(log_eps3n),
            ..row
        };
        let orders: Vec<f64> = runs.iter().map(|r| r.1 as f64).collect();
        let components: Vec<f64> = runs.iter().map(|r| r.0 as f64).collect();
        if eps < 0.0 {
            let reference = 2.0 / (eps * eps) * log_eps3n;
            let ratios: Vec<f64> = orders.iter().map(|o| o / reference).collect();
            let (lo, hi) = env::SUBCRITICAL_RATIO;
            let success = rate(ratios.iter().map(|r| (lo..=hi).contains(r)));
            let mut row = point(SummaryRow::new(cfg.suite, "tree_order_ratio", &ratios))
                .reference(1.0, "order / ((2/eps^2) ln(eps^3 n))")
                .envelope(format!("ratio in [{lo}, {hi}] in >= {} of runs", env::MAJORITY), success >= env::MAJORITY);
            row.success_rate = Some(success);
            rows.push(point(SummaryRow::new(cfg.suite, "tree_order", &orders)).reference(reference, "(2/eps^2) ln(eps^3 n)"));
            rows.push(row);
            rows.push(point(SummaryRow::new(cfg.suite, "largest_component", &components)));
        } else {
            let reference = 2.0 * eps * nf;
            let need = env::SUPERCRITICAL_FRACTION * reference;
            let success = rate(orders.iter().map(|&o| o >= need));
            let mut row = point(SummaryRow::new(cfg.suite, "tree_order", &orders))
                .reference(reference, "2 eps n")
                .envelope(
                    format!("order >= {} * 2 eps n in >= {} of runs", env::SUPERCRITICAL_FRACTION, env::MAJORITY),
                    success >= env::MAJORITY,
                );
            row.success_rate = Some(success);
            rows.push(row);
            let giant = point(SummaryRow::new(cfg.suite, "largest_component", &components)).reference(reference, "2 eps n");
            let pass = (giant.mean - reference).abs() <= env::GIANT_RELATIVE * reference;
            rows.push(giant.envelope(format!("within {} of 2 eps n", env::GIANT_RELATIVE), pass));
        }
    }
    Ok((rows, raw))
}

/// Largest component fraction of `G(n, d/n)` against the survival probability.
pub fn exp_giant_benchmark(cfg: &ExperimentConfig) -> Result<Tables, ExperimentError> {
    let n = cfg.n;
    let mut rows = Vec::new();
    let mut raw = Vec::new();
    for (i, &d) in cfg.d.iter().enumerate() {
        let xs = par_reps(cfg, i as u32, |rng| {
            let g = sample_gnp(n, (d / n as f64).min(1.0), rng)?;
            Ok(connected_components(&g).largest().map_or(0, |(_, s)| s) as f64 / n as f64)
        })?;
        raw.extend(raw_values(cfg, json!({"n": n, "d": d}), &xs));
        let gamma = survival_probability(d);
        let row = SummaryRow { n: Some(n), d: Some(d), ..SummaryRow::new(cfg.suite, "largest_fraction", &xs) }
            .reference(gamma, "gamma(d): 1 - gamma = exp(-gamma d)");
        let row = if d <= 1.0 {
            let pass = row.mean < env::SMALL_COMPONENT_FRACTION;
            row.envelope(format!("mean < {}", env::SMALL_COMPONENT_FRACTION), pass)
        } else {
            let mut pass = (row.mean - gamma).abs() <= env::GIANT_ABSOLUTE;
            let mut text = format!("|mean - gamma| <= {}", env::GIANT_ABSOLUTE);
            if gamma > env::LARGE_GIANT_FRACTION {
                pass &= row.mean > env::LARGE_GIANT_FRACTION;
                text += &format!("; mean > {}", env::LARGE_GIANT_FRACTION);
            }
            row.envelope(text, pass)
        };
        rows.push(row);
    }
    Ok((rows, raw))
}

fn r_of(cfg: &ExperimentConfig) -> f64 {
    cfg.n.min(cfg.colours() as usize) as f64
}

/// Longest rainbow DFS path in `G_c(n, d/n)`.
pub fn exp_rdfs_path(cfg: &ExperimentConfig) -> Result<Tables, ExperimentError> {
    let (n, c, d, delta) = (cfg.n, cfg.colours(), cfg.d[0], cfg.delta);
    let params = match cfg.mode {
        Mode::Faithful => RdfsParams::faithful(delta),
        Mode::Greedy => RdfsParams::greedy(),
    };
    let traces = par_reps(cfg, 0, |rng| {
        let g = sample_coloured_gnp(n, (d / n as f64).min(1.0), c, rng)?;
        Ok(rdfs_longest_path(&g, &params)?)
    })?;
    let raw = traces
        .iter()
        .enumerate()
        .map(|(rep, tr)| {
            json!({"suite": cfg.suite, "point": {"n": n, "c": c, "d": d, "delta": delta, "mode": cfg.mode}, "rep": rep,
                   "value": {"length": tr.length(), "queries": tr.queries, "accepted": tr.accepted, "stop": tr.stop}})
        })
        .collect();
    let lengths: Vec<f64> = traces.iter().map(|t| t.length() as f64).collect();
    let need = (1.0 - delta) * r_of(cfg);
    let success = rate(lengths.iter().map(|&l| l >= need));
    let mut row = SummaryRow { n: Some(n), c: Some(c), d: Some(d), delta: Some(delta), ..SummaryRow::new(cfg.suite, "path_length", &lengths) }
        .reference(need, "(1-delta) min(n,c)")
        .envelope(format!("length >= (1-delta) min(n,c) in >= {} of runs", env::STRONG_MAJORITY), success >= env::STRONG_MAJORITY);
    row.success_rate = Some(success);
    Ok((vec![row], raw))
}

/// Largest tree found by rainbow BFS at `p = (1 + eps) / n`.
pub fn exp_rbfs_tree(cfg: &ExperimentConfig) -> Result<Tables, ExperimentError> {
    let (n, c, eps) = (cfg.n, cfg.colours(), cfg.eps[0]);
    let alpha = c as f64 / n as f64;
    let params = RbfsParams::for_epsilon(cfg.mode, alpha, eps);
    let traces = par_reps(cfg, 0, |rng| {
        let g = sample_coloured_gnp(n, ((1.0 + eps) / n as f64).min(1.0), c, rng)?;
        Ok(rbfs_forest(&g, &params, rng)?)
    })?;
    let raw = traces
        .iter()
        .enumerate()
        .map(|(rep, tr)| {
            json!({"suite": cfg.suite, "point": {"n": n, "c": c, "eps": eps, "mode": cfg.mode}, "rep": rep,
                   "value": {"order": tr.order(), "queries": tr.queries, "accepted": tr.accepted, "stop": tr.stop}})
        })
        .collect();
    let orders: Vec<f64> = traces.iter().map(|t| t.order() as f64).collect();
    let reference = alpha / (alpha + 1.0) * eps * n as f64;
    let success = rate(orders.iter().map(|&o| o >= env::RBFS_FRACTION * reference));
    let mut row = SummaryRow {
        n: Some(n),
        c: Some(c),
        eps: Some(eps),
        delta: Some(params.delta),
        log_eps3n: Some((eps.powi(3) * n as f64).ln()),
        ..SummaryRow::new(cfg.suite, "tree_order", &orders)
    }
    .reference(reference, "alpha/(alpha+1) eps n")
    .envelope(
        format!("order >= {} * reference in >= {} of runs", env::RBFS_FRACTION, env::STRONG_MAJORITY),
        success >= env::STRONG_MAJORITY,
    );
    row.success_rate = Some(success);
    Ok((vec![row], raw))
}

fn cycle_rows(
    cfg: &ExperimentConfig,
    runs: &[crate::finders::SprinkledCycle],
    need: f64,
    formula: &str,
    point: impl Fn(SummaryRow) -> SummaryRow,
) -> Tables {
    let raw = runs
        .iter()
        .enumerate()
        .map(|(rep, r)| {
            json!({"suite": cfg.suite, "point": {"n": cfg.n, "c": cfg.colours(), "d": cfg.d.first(), "eps": cfg.eps.first(), "delta": cfg.delta, "mode": cfg.mode},
                   "rep": rep, "value": {"p1": r.p1, "p2": r.p2, "path_length": r.path.length(), "queries": r.path.queries,
                   "cycle_length": r.cycle.as_ref().map(|c| c.length())}})
        })
        .collect();
    let cycles: Vec<f64> = runs.iter().map(|r| r.cycle.as_ref().map_or(0, |c| c.length()) as f64).collect();
    let paths: Vec<f64> = runs.iter().map(|r| r.path.length() as f64).collect();
    let success = rate(cycles.iter().map(|&l| l >= need));
    let mut row = point(SummaryRow::new(cfg.suite, "cycle_length", &cycles))
        .reference(need, formula)
        .envelope(format!("cycle >= reference in >= {} of runs", env::MAJORITY), success >= env::MAJORITY);
    row.success_rate = Some(success);
    let path_row = point(SummaryRow::new(cfg.suite, "path_length", &paths));
    (vec![row, path_row], raw)
}

/// Rainbow cycle by path search plus sprinkling at `p = d / n`.
pub fn exp_cycle(cfg: &ExperimentConfig) -> Result<Tables, ExperimentError> {
    let (n, c, d, delta) = (cfg.n, cfg.colours(), cfg.d[0], cfg.delta);
    let runs = par_reps(cfg, 0, |rng| Ok(find_rainbow_cycle_sprinkled(n, c, d, delta, cfg.mode, rng)?))?;
    let point = |row| SummaryRow { n: Some(n), c: Some(c), d: Some(d), delta: Some(delta), ..row };
    Ok(cycle_rows(cfg, &runs, (1.0 - delta) * r_of(cfg), "(1-delta) min(n,c)", point))
}

/// Rainbow cycle just above criticality, `p = (1 + 2 eps) / n`.
pub fn exp_weak_cycle(cfg: &ExperimentConfig) -> Result<Tables, ExperimentError> {
    let (n, c, eps) = (cfg.n, cfg.colours(), cfg.eps[0]);
    let runs = par_reps(cfg, 0, |rng| Ok(find_rainbow_cycle_weakly_super(n, c, eps, rng)?))?;
    let point = |row| SummaryRow { n: Some(n), c: Some(c), eps: Some(eps), log_eps3n: Some((eps.powi(3) * n as f64).ln()), ..row };
    let need = env::WEAK_CYCLE_CONSTANT * eps * eps * n as f64;
    Ok(cycle_rows(cfg, &runs, need, "0.02 eps^2 n (pilot envelope)", point))
}

#[cfg(test)]
mod tests {
    use super::super::{run_suite, Suite};
    use super::*;

    #[test]
    fn tiny_min_split_is_exactly_one() {
        let cfg = ExperimentConfig { reps: 50, m: vec![2, 3], ..ExperimentConfig::defaults(Suite::MinSplit) };
        let out = run_suite(&cfg).unwrap();
        assert!(out.rows.iter().all(|r| r.mean == 1.0 && r.std == 0.0));
        assert!(out.passed());
        assert_eq!(out.raw.len(), 100);
    }

    #[test]
    fn one_nonroot_has_bridge_number_one() {
        let cfg = ExperimentConfig { reps: 30, m: vec![6], t: vec![5], ..ExperimentConfig::defaults(Suite::Bridge) };
        let row = &run_suite(&cfg).unwrap().rows[0];
        assert_eq!((row.mean, row.std), (1.0, 0.0));
    }

    #[test]
    fn all_roots_gives_singleton_trees() {
        let cfg = ExperimentConfig { reps: 20, m: vec![7], t: vec![7], ..ExperimentConfig::defaults(Suite::Borel) };
        let out = run_suite(&cfg).unwrap();
        assert_eq!(out.rows[0].mean, 1.0);
        assert!(out.rows[1..].iter().all(|r| r.mean == 0.0));
    }

    #[test]
    fn half_colours_lower_the_cycle_target() {
        let cfg = ExperimentConfig { reps: 2, n: 2000, c: Some(1000), d: vec![60.0], ..ExperimentConfig::defaults(Suite::Cycle) };
        let out = run_suite(&cfg).unwrap();
        assert_eq!(out.rows[0].reference, Some(500.0));
    }

    #[test]
    fn small_phase_run_reports_both_finders() {
        let cfg = ExperimentConfig { reps: 3, n: 20_000, eps: vec![-0.2, 0.2], ..ExperimentConfig::defaults(Suite::Phase) };
        let out = run_suite(&cfg).unwrap();
        assert_eq!(out.rows.len(), 5);
        assert!(out.rows.iter().all(|r| r.log_eps3n.is_some()));
    }
}
