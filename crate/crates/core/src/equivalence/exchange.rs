//! Exchangeability testing: a sequence law that survives coordinate
//! permutation is exactly one that some stationary talent model can
//! produce, so a rejection here rules the whole model class out.

use super::compare::{infer_grid, null_split_tvd, pooled_counts, CompareOptions};
use super::histogram::{tvd, PathHistogram};
use super::{ComparisonReport, TestError};
use crate::models::GeneratorSpec;
use crate::rng::RngStream;

/// The order-reversing permutation of `0..m`.
pub fn reversal(m: usize) -> Vec<usize> {
    (0..m).rev().collect()
}

/// All pairwise transpositions of `0..m`.
pub fn all_transpositions(m: usize) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let mut p: Vec<usize> = (0..m).collect();
            p.swap(i, j);
            perms.push(p);
        }
    }
    perms
}

fn validate_permutation(perm: &[usize], m: usize) -> Result<(), TestError> {
    let mut seen = vec![false; m];
    if perm.len() != m {
        return Err(TestError::InvalidPermutation(perm.to_vec(), m));
    }
    for &i in perm {
        if i >= m || seen[i] {
            return Err(TestError::InvalidPermutation(perm.to_vec(), m));
        }
        seen[i] = true;
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct ExchangeabilityOptions {
    pub buckets: usize,
    pub integer_cap: i64,
    pub pilot_reps: u64,
    /// Bootstrap iterations for the max-TVD null distribution. The smallest
    /// attainable p-value is `1 / (bootstrap + 1)`, so rejection at
    /// significance `s` needs `bootstrap >= 1/s`.
    pub bootstrap: usize,
    pub significance: f64,
}

impl Default for ExchangeabilityOptions {
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
pub struct ExchangeabilityOutcome {
    pub report: ComparisonReport,
    /// Observed TVD per permutation, in input order.
    pub per_permutation_tvd: Vec<f64>,
}

/// Test whether the length-`m` path law of `gen` is invariant under the
/// given coordinate permutations.
///
/// A baseline histogram of `(Y_1..Y_m)` is compared against one
/// independently replicated histogram of `(Y_sigma(1)..Y_sigma(m))` per
/// permutation; the statistic is the largest TVD and its p-value comes from
/// a permutation bootstrap of that maximum. A `Rejected` verdict means the
/// law is not exchangeable, hence no stationary talent model generates it.
pub fn exchangeability_test(
    gen: &GeneratorSpec,
    m: usize,
    reps: u64,
    permutations: &[Vec<usize>],
    options: &ExchangeabilityOptions,
    rng: &RngStream,
) -> Result<ExchangeabilityOutcome, TestError> {
    if m > 8 {
        return Err(TestError::PathTooLong(m));
    }
    if permutations.is_empty() {
        return Err(TestError::EmptySample);
    }
    for perm in permutations {
        validate_permutation(perm, m)?;
    }
    gen.validate()?;

    let compare_options = CompareOptions {
        buckets: options.buckets,
        integer_cap: options.integer_cap,
        pilot_reps: options.pilot_reps,
        bootstrap: options.bootstrap,
        significance: options.significance,
    };
    let grid = infer_grid(gen, gen, m, &compare_options, &rng.split(0))?;

    let sample_histogram = |perm: Option<&[usize]>,
                            stream: &RngStream|
     -> Result<PathHistogram, TestError> {
        let mut hist = PathHistogram::new(grid.clone());
        let mut permuted = vec![0.0; m];
        for i in 0..reps {
            let mut child = stream.split(i as u32);
            let path = gen.sample_sequence(m, &mut child)?.scalar_values()?;
            match perm {
                Some(p) => {
                    for (slot, &src) in permuted.iter_mut().zip(p) {
                        *slot = path[src];
                    }
                    hist.add_path(&permuted)?;
                }
                None => hist.add_path(&path)?,
            }
        }
        Ok(hist)
    };

    let baseline = sample_histogram(None, &rng.split(1))?;
    let mut permuted_hists = Vec::with_capacity(permutations.len());
    let mut per_permutation_tvd = Vec::with_capacity(permutations.len());
    for (k, perm) in permutations.iter().enumerate() {
        let hist = sample_histogram(Some(perm), &rng.split(2 + k as u32))?;
        per_permutation_tvd.push(tvd(&baseline, &hist)?);
        permuted_hists.push(hist);
    }
    let observed =
        per_permutation_tvd.iter().fold(0.0f64, |acc, d| acc.max(*d));

    // bootstrap the max statistic: one hypergeometric split per permutation
    // per iteration, all under the null of a shared law
    let pooled: Vec<Vec<u64>> =
        permuted_hists.iter().map(|h| pooled_counts(&baseline, h)).collect();
    let mut boot_rng = rng.split(1_000_000);
    let mut at_least = 0usize;
    for _ in 0..options.bootstrap {
        let mut max_null = 0.0f64;
        for (h, pool) in permuted_hists.iter().zip(&pooled) {
            max_null = max_null.max(null_split_tvd(pool, baseline.total(), h.total(), &mut boot_rng));
        }
        if max_null >= observed - 1e-15 {
            at_least += 1;
        }
    }
    let p_value = (1 + at_least) as f64 / (options.bootstrap + 1) as f64;

    let report = ComparisonReport::from_p_value(
        "exchangeability-max-tvd",
        observed,
        p_value,
        reps,
        reps * permutations.len() as u64,
        options.significance,
    );
    Ok(ExchangeabilityOutcome { report, per_permutation_tvd })
}
