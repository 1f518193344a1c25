//! Discrete-time generative models: urn schemes, talent-Bernoulli sequences,
//! preferential-attachment focal processes, multiplicative growth, and the
//! random-typing monkey.
//!
//! All generators are pure functions of `(params, rng)`; run them
//! concurrently by giving each invocation its own split stream. A requested
//! length of zero yields an empty sample rather than an error.

mod binary;
mod growth;
mod monkey;
mod urn;

pub use binary::{
    iid_bernoulli_sequence, price_sequence, simon_occurrence_sequence, talent_binary_sequence,
    TalentBinaryParams,
};
pub use growth::{ba_degree_sequence, gibrat_sequence, gibrat_sequence_from_quantile};
pub use monkey::{monkey_occurrence_sequence, monkey_random_word_length, MonkeyParams};
pub use urn::{multicolor_urn_sequence, polya_binary_sequence, polya_draw, UrnState};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("urn needs at least 2 colors, got {0}")]
    TooFewColors(usize),
    #[error("urn counts must be strictly positive and finite, got {0} for color {1}")]
    BadCount(f64, usize),
    #[error("urn reinforcement must be non-negative and finite, got {0} for color {1}")]
    BadReinforcement(f64, usize),
    #[error("urn counts and reinforcement must have equal length ({counts} vs {reinforcement})")]
    LengthMismatch { counts: usize, reinforcement: usize },
    #[error("talent distribution support [{lo}, {hi}] is not contained in [0, 1]")]
    TalentSupport { lo: f64, hi: f64 },
    #[error("{name} must lie strictly inside (0, 1), got {value}")]
    NotInOpenUnitInterval { name: &'static str, value: f64 },
    #[error("{name} must be a positive integer")]
    ZeroParam { name: &'static str },
    #[error("initial occurrences n_r0 = {n_r0} must not exceed initial total k0 = {k0}")]
    SimonInitialCounts { n_r0: u32, k0: u32 },
    #[error("entry time {t_entry} must not exceed end time {t_end}")]
    EntryAfterEnd { t_entry: u32, t_end: u32 },
    #[error("initial size must be strictly positive and finite, got {0}")]
    BadInitialSize(f64),
    #[error("growth support reaches {lo}, which is not strictly above -1")]
    GrowthSupport { lo: f64 },
    #[error("word length {word_len} must lie in 1..={max_len}")]
    WordLength { word_len: u32, max_len: u32 },
}
