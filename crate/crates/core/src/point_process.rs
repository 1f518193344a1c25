//! Continuous-time twins: the contagious Poisson process (event rate
//! `alpha + beta * count`) and its mixed-Poisson equivalent, whose rate is a
//! single Gamma(alpha/beta, beta) draw modulated by `exp(beta t)`.
//!
//! Both are simulated exactly from event times, with no discretization:
//! the contagious process as a pure-birth chain of exponential races, the
//! mixed process by inverting its cumulative intensity. The time maps
//! `compress(t) = ln(beta t + 1) / beta` and `expand(t) = (exp(beta t) - 1)
//! / beta` are mutual inverses; expanding a contagious timeline yields a
//! homogeneous mixed-Poisson timeline.

use crate::rng::RngStream;
use rand_distr::Distribution as _;
use thiserror::Error;

/// Hard cap on events per realization; the pure-birth chain is
/// non-explosive in finite time, but large `beta * horizon` gets slow.
pub const MAX_EVENTS: usize = 1_000_000;

/// Gamma draws below this are redrawn to keep the time change stable.
const MIN_GAMMA_DRAW: f64 = 1e-300;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PointProcessError {
    #[error("{name} must be strictly positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("event cap of {MAX_EVENTS} exceeded before reaching the horizon")]
    EventCapExceeded,
    #[error("event times must be strictly increasing and lie in (0, horizon]")]
    InvalidTimeline,
    #[error("query time {t} outside [0, {horizon}]")]
    TimeOutOfRange { t: f64, horizon: f64 },
}

fn check_positive(name: &'static str, value: f64) -> Result<f64, PointProcessError> {
    if !value.is_finite() || value <= 0.0 {
        return Err(PointProcessError::NonPositive { name, value });
    }
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointProcessParams {
    pub alpha: f64,
    pub beta: f64,
    pub horizon: f64,
}

impl PointProcessParams {
    pub fn new(alpha: f64, beta: f64, horizon: f64) -> Result<Self, PointProcessError> {
        check_positive("alpha", alpha)?;
        check_positive("beta", beta)?;
        check_positive("horizon", horizon)?;
        Ok(Self { alpha, beta, horizon })
    }
}

/// Sorted event times of a counting process on `[0, horizon]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EventTimeline {
    times: Vec<f64>,
    horizon: f64,
}

impl EventTimeline {
    pub fn new(times: Vec<f64>, horizon: f64) -> Result<Self, PointProcessError> {
        check_positive("horizon", horizon)?;
        let ordered = times.windows(2).all(|w| w[0] < w[1]);
        let in_range = times.iter().all(|t| *t > 0.0 && *t <= horizon && t.is_finite());
        if !ordered || !in_range {
            return Err(PointProcessError::InvalidTimeline);
        }
        Ok(Self { times, horizon })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Number of events at or before `t`.
    pub fn count_at(&self, t: f64) -> Result<usize, PointProcessError> {
        if !(0.0..=self.horizon).contains(&t) {
            return Err(PointProcessError::TimeOutOfRange { t, horizon: self.horizon });
        }
        Ok(self.times.partition_point(|x| *x <= t))
    }
}

/// Exact simulation of the contagious Poisson process: after `k` events the
/// waiting time to the next is Exponential(alpha + beta k).
pub fn contagious_poisson(
    params: &PointProcessParams,
    rng: &mut RngStream,
) -> Result<EventTimeline, PointProcessError> {
    let mut times = Vec::new();
    let mut t = 0.0;
    loop {
        let rate = params.alpha + params.beta * times.len() as f64;
        t += rand_distr::Exp::new(rate).expect("rate > 0").sample(rng);
        if t > params.horizon {
            break;
        }
        if times.len() == MAX_EVENTS {
            return Err(PointProcessError::EventCapExceeded);
        }
        times.push(t);
    }
    Ok(EventTimeline { times, horizon: params.horizon })
}

/// Exact simulation of the mixed twin: draw `Q ~ Gamma(alpha/beta, beta)`
/// once, then invert the cumulative intensity of the rate `Q exp(beta t)`,
/// mapping unit-rate arrival times `u` to `ln(1 + beta u / Q) / beta`.
pub fn mixed_poisson_twin(
    params: &PointProcessParams,
    rng: &mut RngStream,
) -> Result<EventTimeline, PointProcessError> {
    let gamma = rand_distr::Gamma::new(params.alpha / params.beta, params.beta)
        .expect("parameters validated");
    let mut q = gamma.sample(rng);
    while q < MIN_GAMMA_DRAW {
        q = gamma.sample(rng);
    }
    let cutoff = q * (params.beta * params.horizon).exp_m1() / params.beta;
    let exp1 = rand_distr::Exp1;
    let mut times = Vec::new();
    let mut u: f64 = 0.0;
    loop {
        let step: f64 = exp1.sample(rng);
        u += step;
        if u > cutoff {
            break;
        }
        if times.len() == MAX_EVENTS {
            return Err(PointProcessError::EventCapExceeded);
        }
        times.push((params.beta * u / q).ln_1p() / params.beta);
    }
    Ok(EventTimeline { times, horizon: params.horizon })
}

/// Direction of the time rescaling applied to event times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RescaleDirection {
    /// `t -> ln(beta t + 1) / beta`, pulling late times earlier.
    Compress,
    /// `t -> (exp(beta t) - 1) / beta`, pushing times later; inverse of
    /// `Compress`.
    Expand,
}

/// Apply the rescaling map to every event time and to the horizon.
pub fn time_rescale(
    timeline: &EventTimeline,
    beta: f64,
    direction: RescaleDirection,
) -> Result<EventTimeline, PointProcessError> {
    check_positive("beta", beta)?;
    let map = |t: f64| match direction {
        RescaleDirection::Compress => (beta * t).ln_1p() / beta,
        RescaleDirection::Expand => (beta * t).exp_m1() / beta,
    };
    // strictly increasing maps preserve ordering and the horizon bound
    Ok(EventTimeline {
        times: timeline.times.iter().map(|t| map(*t)).collect(),
        horizon: map(timeline.horizon),
    })
}
