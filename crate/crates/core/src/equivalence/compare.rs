//! Monte Carlo comparison of path distributions: histogram construction
//! over split streams, grid inference, and a permutation-bootstrap p-value
//! for the total variation distance.

use super::histogram::{tvd, GridSpec, PathHistogram};
use super::{ComparisonReport, TestError};
use crate::models::GeneratorSpec;
use crate::rng::RngStream;
use rand_distr::Distribution as _;

#[derive(Debug, Clone)]
pub struct CompareOptions {
    /// Equal-probability buckets per coordinate for real-valued paths.
    pub buckets: usize,
    /// Tail cap for integer-valued paths.
    pub integer_cap: i64,
    /// Pilot replications per generator used to infer the grid.
    pub pilot_reps: u64,
    /// Permutation-bootstrap iterations behind the p-value.
    pub bootstrap: usize,
    pub significance: f64,
}

impl Default for CompareOptions {
    fn default() -> Self {
        Self {
            buckets: 12,
            integer_cap: 32,
            pilot_reps: 4096,
            bootstrap: 1999,
            significance: super::DEFAULT_SIGNIFICANCE,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CompareOutcome {
    pub report: ComparisonReport,
    pub tvd: f64,
    pub histogram_a: PathHistogram,
    pub histogram_b: PathHistogram,
}

/// Histogram of `reps` independent length-`m` paths; replication `i` runs
/// on the child stream `rng.split(i)`, so the result does not depend on how
/// the loop is scheduled.
pub fn empirical_path_distribution(
    gen: &GeneratorSpec,
    m: usize,
    reps: u64,
    grid: &GridSpec,
    rng: &RngStream,
) -> Result<PathHistogram, TestError> {
    gen.validate()?;
    let mut hist = PathHistogram::new(grid.clone());
    for i in 0..reps {
        let mut child = rng.split(i as u32);
        let path = gen.sample_sequence(m, &mut child)?.scalar_values()?;
        hist.add_path(&path)?;
    }
    Ok(hist)
}

fn pilot_paths(
    gen: &GeneratorSpec,
    m: usize,
    reps: u64,
    rng: &RngStream,
) -> Result<Vec<Vec<f64>>, TestError> {
    (0..reps)
        .map(|i| {
            let mut child = rng.split(i as u32);
            Ok(gen.sample_sequence(m, &mut child)?.scalar_values()?)
        })
        .collect()
}

fn is_integral(paths: &[Vec<f64>]) -> bool {
    paths.iter().flatten().all(|v| v.fract() == 0.0 && *v >= 0.0)
}

fn is_binary(paths: &[Vec<f64>]) -> bool {
    paths.iter().flatten().all(|v| *v == 0.0 || *v == 1.0)
}

/// Infer a common grid for two generators from pilot samples of both: a
/// binary grid when every pilot outcome is 0/1, a capped integer grid for
/// other integer outcomes, and pooled equal-probability buckets otherwise.
pub fn infer_grid(
    a: &GeneratorSpec,
    b: &GeneratorSpec,
    m: usize,
    options: &CompareOptions,
    rng: &RngStream,
) -> Result<GridSpec, TestError> {
    let mut pooled = pilot_paths(a, m, options.pilot_reps, &rng.split(0))?;
    pooled.extend(pilot_paths(b, m, options.pilot_reps, &rng.split(1))?);
    if is_binary(&pooled) {
        Ok(GridSpec::Binary { len: m })
    } else if is_integral(&pooled) {
        let max = pooled.iter().flatten().fold(0.0f64, |acc, v| acc.max(*v));
        Ok(GridSpec::IntegerCapped { len: m, cap: (max as i64).min(options.integer_cap).max(1) })
    } else {
        GridSpec::equal_probability(&pooled, options.buckets)
    }
}

/// Randomly reassign the pooled bin counts of two histograms into two
/// groups of the original sizes (a multivariate hypergeometric split) and
/// return the TVD of the split. Equivalent to permuting sample labels.
pub(super) fn null_split_tvd(
    pooled: &[u64],
    na: u64,
    nb: u64,
    rng: &mut RngStream,
) -> f64 {
    let mut remaining_total: u64 = pooled.iter().sum();
    let mut remaining_a = na;
    let mut sum = 0.0;
    for &count in pooled {
        if count == 0 {
            continue;
        }
        let take = if remaining_a == 0 {
            0
        } else if remaining_a == remaining_total {
            count
        } else {
            rand_distr::Hypergeometric::new(remaining_total, count, remaining_a)
                .expect("counts within range")
                .sample(rng)
        };
        remaining_a -= take;
        remaining_total -= count;
        let fa = take as f64 / na as f64;
        let fb = (count - take) as f64 / nb as f64;
        sum += (fa - fb).abs();
    }
    sum / 2.0
}

pub(super) fn pooled_counts(a: &PathHistogram, b: &PathHistogram) -> Vec<u64> {
    let mut keys: Vec<&[u16]> = a.bins().map(|(k, _)| k).collect();
    keys.extend(b.bins().map(|(k, _)| k));
    keys.sort();
    keys.dedup();
    keys.iter().map(|k| a.count(k) + b.count(k)).collect()
}

/// Permutation-bootstrap p-value for an observed TVD between two
/// histograms, by repeated hypergeometric splits of the pooled counts.
pub(super) fn tvd_bootstrap_p_value(
    a: &PathHistogram,
    b: &PathHistogram,
    observed: f64,
    iterations: usize,
    rng: &mut RngStream,
) -> f64 {
    let pooled = pooled_counts(a, b);
    let mut at_least = 0usize;
    for _ in 0..iterations {
        if null_split_tvd(&pooled, a.total(), b.total(), rng) >= observed - 1e-15 {
            at_least += 1;
        }
    }
    (1 + at_least) as f64 / (iterations + 1) as f64
}

/// Compare the length-`m` path laws of two generators: build independent
/// histograms on a shared inferred grid, report their TVD, and calibrate it
/// with a permutation bootstrap.
pub fn compare_generators(
    a: &GeneratorSpec,
    b: &GeneratorSpec,
    m: usize,
    reps: u64,
    options: &CompareOptions,
    rng: &RngStream,
) -> Result<CompareOutcome, TestError> {
    let grid = infer_grid(a, b, m, options, rng)?;
    let histogram_a = empirical_path_distribution(a, m, reps, &grid, &rng.split(2))?;
    let histogram_b = empirical_path_distribution(b, m, reps, &grid, &rng.split(3))?;
    let observed = tvd(&histogram_a, &histogram_b)?;
    let mut boot_rng = rng.split(4);
    let p_value =
        tvd_bootstrap_p_value(&histogram_a, &histogram_b, observed, options.bootstrap, &mut boot_rng);
    let report = ComparisonReport::from_p_value(
        "tvd-permutation-bootstrap",
        observed,
        p_value,
        reps,
        reps,
        options.significance,
    );
    Ok(CompareOutcome { report, tvd: observed, histogram_a, histogram_b })
}
