//! The log-space talent model of citation counts and its explicit purely
//! path-dependent twin.
//!
//! The talent model draws a latent level once and adds i.i.d. Gaussian noise
//! per observation. The twin generates each observation from the running sum
//! of its predecessors: given a length-`n` history, the next value is normal
//! with mean `(c a + sum) / (n + c)` and variance `b (1 + 1/(n + c))`. Under
//! the parameter map [`twin_from_q`] the two processes have identical joint
//! distributions, so all computation happens in log space and
//! [`to_citation_counts`] is a presentation-layer exponential.

use crate::rng::RngStream;
use crate::sequence::{SequenceSample, SequenceError};
use rand_distr::Distribution as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GaussianError {
    #[error("{name} must be strictly positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("{name} must be finite, got {value}")]
    NotFinite { name: &'static str, value: f64 },
}

fn check_positive(name: &'static str, value: f64) -> Result<f64, GaussianError> {
    if !value.is_finite() || value <= 0.0 {
        return Err(GaussianError::NonPositive { name, value });
    }
    Ok(value)
}

/// Talent-model parameters: latent level `T ~ N(mu_t, sigma_t^2)` and
/// per-observation noise `X_n ~ N(0, sigma_x^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QModelParams {
    pub mu_t: f64,
    pub sigma_t: f64,
    pub sigma_x: f64,
}

impl QModelParams {
    pub fn new(mu_t: f64, sigma_t: f64, sigma_x: f64) -> Result<Self, GaussianError> {
        if !mu_t.is_finite() {
            return Err(GaussianError::NotFinite { name: "mu_t", value: mu_t });
        }
        check_positive("sigma_t", sigma_t)?;
        check_positive("sigma_x", sigma_x)?;
        Ok(Self { mu_t, sigma_t, sigma_x })
    }
}

/// Twin parameters: location `a`, noise floor `b`, and pull strength `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwinParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TwinParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, GaussianError> {
        if !a.is_finite() {
            return Err(GaussianError::NotFinite { name: "a", value: a });
        }
        check_positive("b", b)?;
        check_positive("c", c)?;
        Ok(Self { a, b, c })
    }
}

/// Sample the talent model: `Y_k = T + X_k`.
pub fn q_model_sequence(params: &QModelParams, n: usize, rng: &mut RngStream) -> SequenceSample {
    let normal = rand_distr::StandardNormal;
    let z: f64 = normal.sample(rng);
    let t = params.mu_t + params.sigma_t * z;
    let values = (0..n)
        .map(|_| {
            let z: f64 = normal.sample(rng);
            t + params.sigma_x * z
        })
        .collect();
    SequenceSample::real("q-model", values)
}

/// Parameters of the path-dependent twin with the same joint law:
/// `a = mu_t`, `b = sigma_x^2`, `c = sigma_x^2 / sigma_t^2`.
pub fn twin_from_q(params: &QModelParams) -> TwinParams {
    let b = params.sigma_x * params.sigma_x;
    TwinParams { a: params.mu_t, b, c: b / (params.sigma_t * params.sigma_t) }
}

/// Inverse of [`twin_from_q`]: `mu_t = a`, `sigma_x = sqrt(b)`,
/// `sigma_t = sqrt(b / c)`.
pub fn q_from_twin(params: &TwinParams) -> QModelParams {
    QModelParams { mu_t: params.a, sigma_t: (params.b / params.c).sqrt(), sigma_x: params.b.sqrt() }
}

/// Conditional mean and variance of the next observation given `history`.
pub fn twin_conditional_law(params: &TwinParams, history: &[f64]) -> (f64, f64) {
    let n = history.len() as f64;
    let sum: f64 = history.iter().sum();
    let mean = (params.c * params.a + sum) / (n + params.c);
    let variance = params.b * (1.0 + 1.0 / (n + params.c));
    (mean, variance)
}

/// Sample the twin by iterating its conditional law.
pub fn twin_sequence(params: &TwinParams, n: usize, rng: &mut RngStream) -> SequenceSample {
    let normal = rand_distr::StandardNormal;
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        let (mean, variance) = twin_conditional_law(params, &values);
        let z: f64 = normal.sample(rng);
        values.push(mean + variance.sqrt() * z);
    }
    SequenceSample::real("gaussian-twin", values)
}

/// Map a log-space sample back to counts, entrywise `exp`.
pub fn to_citation_counts(sample: &SequenceSample) -> Result<SequenceSample, SequenceError> {
    let values = sample.as_real()?;
    Ok(SequenceSample::real(sample.model_id(), values.iter().map(|v| v.exp()).collect()))
}
