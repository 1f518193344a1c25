//! Generative models of success and the statistical machinery to show when
//! two of them cannot be told apart.
//!
//! The crate pairs models that attribute outcomes to a fixed latent
//! "talent" with path-dependent models that reinforce past success, in
//! three settings:
//!
//! - binary draw sequences: a two-color reinforcing urn against a latent
//!   success probability ([`generators`]);
//! - real-valued sequences: a latent-level Gaussian model against a
//!   running-mean recursion ([`gaussian`]);
//! - continuous-time counting processes: a contagious Poisson process
//!   against a Gamma-mixed, exponentially modulated Poisson process
//!   ([`point_process`]).
//!
//! [`equivalence`] holds path histograms, total variation distance with
//! permutation-bootstrap calibration, chi-square and Kolmogorov-Smirnov
//! tests, conditional-moment checks, and an exchangeability test.
//! [`musiclab`] replays an empirical download log through a reinforcing
//! urn, fits the reinforcement strength on a grid, and emits rank-profile
//! tables with simulation intervals. Everything is driven by explicit,
//! splittable [`rng::RngStream`]s, so every result is reproducible from a
//! seed.

pub mod cli;
pub mod dist;
pub mod equivalence;
pub mod gaussian;
pub mod generators;
pub mod models;
pub mod musiclab;
pub mod point_process;
pub mod rng;
pub mod sequence;

pub use dist::{inverse_transform, DistError, Distribution};
pub use models::{GeneratorSpec, ModelError};
pub use rng::RngStream;
pub use sequence::{SequenceSample, SequenceValues};
