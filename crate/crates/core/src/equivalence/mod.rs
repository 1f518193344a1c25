//! Statistical machinery that operationalizes "statistically
//! indistinguishable": path histograms over explicit grids, total variation
//! distance with permutation-bootstrap calibration, classical chi-square and
//! Kolmogorov-Smirnov tests, covariance and conditional-moment checks, and
//! an exchangeability test.
//!
//! Every test records its significance threshold in the report it returns;
//! the default across the crate is 1e-3.

mod compare;
mod conditional;
mod exchange;
mod histogram;
mod stats;

pub use compare::{compare_generators, empirical_path_distribution, CompareOptions, CompareOutcome};
pub use conditional::conditional_moment_check;
pub use exchange::{
    all_transpositions, exchangeability_test, reversal, ExchangeabilityOptions,
    ExchangeabilityOutcome,
};
pub use histogram::{tvd, GridSpec, PathHistogram};
pub use stats::{
    chi_square_gof, chi_square_two_sample, covariance_matrix, kolmogorov_sf, ks_one_sample,
    ks_two_sample,
};

use crate::models::ModelError;
use crate::sequence::SequenceError;
use serde::Serialize;
use thiserror::Error;

/// Default significance threshold; crude Bonferroni slack for suites that
/// run many tests.
pub const DEFAULT_SIGNIFICANCE: f64 = 1e-3;

#[derive(Debug, Error)]
pub enum TestError {
    #[error("histograms were built on different grids")]
    GridMismatch,
    #[error("sample set is empty")]
    EmptySample,
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("sequences must share one length, found {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("value {0} is not a valid binary outcome")]
    NonBinaryValue(f64),
    #[error("value {0} is not a valid non-negative integer outcome")]
    NonIntegerValue(f64),
    #[error("expected probabilities must sum to 1, got {0}")]
    BadExpected(f64),
    #[error("fewer than two cells remain after pooling")]
    DegenerateCells,
    #[error("path length {0} exceeds the histogram tractability limit of 8")]
    PathTooLong(usize),
    #[error("path of length {got} does not match grid of length {expected}")]
    PathLengthMismatch { expected: usize, got: usize },
    #[error("{0:?} is not a permutation of 0..{1}")]
    InvalidPermutation(Vec<usize>, usize),
    #[error("position {position} is out of range for sequences of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("conditional bin holds only {got} samples, need at least {needed}")]
    InsufficientBinOccupancy { needed: usize, got: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Outcome of a distributional comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Rejected,
}

/// The result of one statistical test, with the threshold that determined
/// the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub method: String,
    pub statistic: f64,
    pub p_value_or_distance: f64,
    pub samples_a: u64,
    pub samples_b: u64,
    pub verdict: Verdict,
    pub threshold: f64,
}

impl ComparisonReport {
    /// Standard construction: reject when the p-value falls below the
    /// significance threshold.
    pub(crate) fn from_p_value(
        method: &str,
        statistic: f64,
        p_value: f64,
        samples_a: u64,
        samples_b: u64,
        threshold: f64,
    ) -> Self {
        let verdict = if p_value < threshold { Verdict::Rejected } else { Verdict::Consistent };
        Self {
            method: method.to_string(),
            statistic,
            p_value_or_distance: p_value,
            samples_a,
            samples_b,
            verdict,
            threshold,
        }
    }
}
