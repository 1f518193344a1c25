//! Primitive distributions with parameter domains enforced at construction.
//!
//! Gamma uses the shape-scale parameterization throughout.

use crate::rng::RngStream;
use rand_distr::Distribution as _;
use statrs::distribution::ContinuousCDF;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DistError {
    #[error("{name} must be finite, got {value}")]
    NotFinite { name: &'static str, value: f64 },
    #[error("{name} must be non-negative, got {value}")]
    Negative { name: &'static str, value: f64 },
    #[error("{name} must be strictly positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("probability must lie in [0, 1], got {0}")]
    ProbabilityOutOfRange(f64),
    #[error("discrete weights must be non-empty")]
    EmptyWeights,
    #[error("discrete weights must be non-negative and sum to 1, got sum {0}")]
    BadWeightSum(f64),
}

fn check_finite(name: &'static str, value: f64) -> Result<f64, DistError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(DistError::NotFinite { name, value })
    }
}

/// A validated univariate distribution.
///
/// Construct through the checked constructors; the variants themselves are
/// not exported so invalid parameters cannot be smuggled in.
#[derive(Debug, Clone, PartialEq)]
pub enum Distribution {
    Uniform01,
    Normal { mean: f64, variance: f64 },
    LogNormal { log_mean: f64, log_variance: f64 },
    Gamma { shape: f64, scale: f64 },
    Exponential { rate: f64 },
    Bernoulli { p: f64 },
    Discrete { weights: Vec<f64> },
}

impl Distribution {
    pub fn uniform01() -> Self {
        Distribution::Uniform01
    }

    pub fn normal(mean: f64, variance: f64) -> Result<Self, DistError> {
        check_finite("mean", mean)?;
        check_finite("variance", variance)?;
        if variance < 0.0 {
            return Err(DistError::Negative { name: "variance", value: variance });
        }
        Ok(Distribution::Normal { mean, variance })
    }

    pub fn log_normal(log_mean: f64, log_variance: f64) -> Result<Self, DistError> {
        check_finite("log_mean", log_mean)?;
        check_finite("log_variance", log_variance)?;
        if log_variance < 0.0 {
            return Err(DistError::Negative { name: "log_variance", value: log_variance });
        }
        Ok(Distribution::LogNormal { log_mean, log_variance })
    }

    pub fn gamma(shape: f64, scale: f64) -> Result<Self, DistError> {
        check_finite("shape", shape)?;
        check_finite("scale", scale)?;
        if shape <= 0.0 {
            return Err(DistError::NonPositive { name: "shape", value: shape });
        }
        if scale <= 0.0 {
            return Err(DistError::NonPositive { name: "scale", value: scale });
        }
        Ok(Distribution::Gamma { shape, scale })
    }

    pub fn exponential(rate: f64) -> Result<Self, DistError> {
        check_finite("rate", rate)?;
        if rate <= 0.0 {
            return Err(DistError::NonPositive { name: "rate", value: rate });
        }
        Ok(Distribution::Exponential { rate })
    }

    pub fn bernoulli(p: f64) -> Result<Self, DistError> {
        if !(0.0..=1.0).contains(&p) {
            return Err(DistError::ProbabilityOutOfRange(p));
        }
        Ok(Distribution::Bernoulli { p })
    }

    /// Distribution over the indices `0..weights.len()`.
    pub fn discrete(weights: Vec<f64>) -> Result<Self, DistError> {
        if weights.is_empty() {
            return Err(DistError::EmptyWeights);
        }
        let sum: f64 = weights.iter().sum();
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) || (sum - 1.0).abs() > 1e-9 {
            return Err(DistError::BadWeightSum(sum));
        }
        Ok(Distribution::Discrete { weights })
    }

    /// Draw one value, advancing `rng`.
    pub fn sample(&self, rng: &mut RngStream) -> f64 {
        match self {
            Distribution::Uniform01 => rng.next_f64(),
            Distribution::Normal { mean, variance } => {
                if *variance == 0.0 {
                    *mean
                } else {
                    rand_distr::Normal::new(*mean, variance.sqrt())
                        .expect("validated at construction")
                        .sample(rng)
                }
            }
            Distribution::LogNormal { log_mean, log_variance } => {
                if *log_variance == 0.0 {
                    log_mean.exp()
                } else {
                    let z: f64 = rand_distr::StandardNormal.sample(rng);
                    (log_mean + log_variance.sqrt() * z).exp()
                }
            }
            Distribution::Gamma { shape, scale } => rand_distr::Gamma::new(*shape, *scale)
                .expect("validated at construction")
                .sample(rng),
            Distribution::Exponential { rate } => rand_distr::Exp::new(*rate)
                .expect("validated at construction")
                .sample(rng),
            Distribution::Bernoulli { p } => {
                if rng.next_f64() < *p {
                    1.0
                } else {
                    0.0
                }
            }
            Distribution::Discrete { weights } => {
                let u = rng.next_f64();
                let mut acc = 0.0;
                let mut last_positive = 0usize;
                for (i, w) in weights.iter().enumerate() {
                    if *w > 0.0 {
                        last_positive = i;
                    }
                    acc += w;
                    if u < acc {
                        return i as f64;
                    }
                }
                // u landed in the rounding slack past the last cumulative step
                last_positive as f64
            }
        }
    }

    /// Closed support `[lo, hi]` (bounds may be infinite).
    pub fn support(&self) -> (f64, f64) {
        match self {
            Distribution::Uniform01 => (0.0, 1.0),
            Distribution::Normal { mean, variance } => {
                if *variance == 0.0 {
                    (*mean, *mean)
                } else {
                    (f64::NEG_INFINITY, f64::INFINITY)
                }
            }
            Distribution::LogNormal { log_mean, log_variance } => {
                if *log_variance == 0.0 {
                    (log_mean.exp(), log_mean.exp())
                } else {
                    (0.0, f64::INFINITY)
                }
            }
            Distribution::Gamma { .. } => (0.0, f64::INFINITY),
            Distribution::Exponential { .. } => (0.0, f64::INFINITY),
            Distribution::Bernoulli { p } => {
                if *p == 0.0 {
                    (0.0, 0.0)
                } else if *p == 1.0 {
                    (1.0, 1.0)
                } else {
                    (0.0, 1.0)
                }
            }
            Distribution::Discrete { weights } => {
                let lo = weights.iter().position(|w| *w > 0.0).unwrap_or(0);
                let hi = weights.iter().rposition(|w| *w > 0.0).unwrap_or(0);
                (lo as f64, hi as f64)
            }
        }
    }

    /// Analytic CDF, used by distributional test oracles.
    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            Distribution::Uniform01 => x.clamp(0.0, 1.0),
            Distribution::Normal { mean, variance } => {
                if *variance == 0.0 {
                    if x >= *mean {
                        1.0
                    } else {
                        0.0
                    }
                } else {
                    statrs::distribution::Normal::new(*mean, variance.sqrt())
                        .expect("validated at construction")
                        .cdf(x)
                }
            }
            Distribution::LogNormal { log_mean, log_variance } => {
                if x <= 0.0 {
                    0.0
                } else if *log_variance == 0.0 {
                    if x.ln() >= *log_mean {
                        1.0
                    } else {
                        0.0
                    }
                } else {
                    statrs::distribution::Normal::new(*log_mean, log_variance.sqrt())
                        .expect("validated at construction")
                        .cdf(x.ln())
                }
            }
            Distribution::Gamma { shape, scale } => {
                if x <= 0.0 {
                    0.0
                } else {
                    // statrs parameterizes Gamma by rate
                    statrs::distribution::Gamma::new(*shape, 1.0 / scale)
                        .expect("validated at construction")
                        .cdf(x)
                }
            }
            Distribution::Exponential { rate } => {
                if x <= 0.0 {
                    0.0
                } else {
                    1.0 - (-rate * x).exp()
                }
            }
            Distribution::Bernoulli { p } => {
                if x < 0.0 {
                    0.0
                } else if x < 1.0 {
                    1.0 - p
                } else {
                    1.0
                }
            }
            Distribution::Discrete { weights } => {
                if x < 0.0 {
                    return 0.0;
                }
                let k = x.floor() as usize;
                weights.iter().take(k + 1).sum::<f64>().min(1.0)
            }
        }
    }
}

/// Evaluate a quantile function at `u`; with `u` uniform on `[0, 1]` the
/// result follows the law whose generalized inverse CDF was supplied.
pub fn inverse_transform<F: Fn(f64) -> f64>(quantile: F, u: f64) -> Result<f64, DistError> {
    if !(0.0..=1.0).contains(&u) {
        return Err(DistError::ProbabilityOutOfRange(u));
    }
    Ok(quantile(u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::{chi_square_gof, ks_one_sample, Verdict};

    const KS_SIGNIFICANCE: f64 = 1e-3;

    fn draws(dist: &Distribution, n: usize, seed: u64) -> Vec<f64> {
        let mut rng = RngStream::new(seed);
        (0..n).map(|_| dist.sample(&mut rng)).collect()
    }

    fn assert_ks_passes(dist: Distribution, seed: u64) {
        let samples = draws(&dist, 100_000, seed);
        let report = ks_one_sample(&samples, |x| dist.cdf(x), KS_SIGNIFICANCE).unwrap();
        assert_eq!(
            report.verdict,
            Verdict::Consistent,
            "{dist:?}: D = {}, p = {}",
            report.statistic,
            report.p_value_or_distance
        );
    }

    #[test]
    fn zero_variance_normal_is_point_mass() {
        let dist = Distribution::normal(3.5, 0.0).unwrap();
        let mut rng = RngStream::new(1);
        assert_eq!(dist.sample(&mut rng), 3.5);
    }

    #[test]
    fn uniform_mean_clt_bound() {
        let dist = Distribution::uniform01();
        let samples = draws(&dist, 1_000_000, 2);
        let mean = samples.iter().sum::<f64>() / samples.len() as f64;
        assert!((mean - 0.5).abs() < 0.002, "mean = {mean}");
    }

    #[test]
    fn gamma_mean_clt_bound() {
        let dist = Distribution::gamma(2.0, 3.0).unwrap();
        let samples = draws(&dist, 1_000_000, 3);
        let mean = samples.iter().sum::<f64>() / samples.len() as f64;
        assert!((mean - 6.0).abs() < 0.03, "mean = {mean}");
    }

    #[test]
    fn ks_uniform() {
        assert_ks_passes(Distribution::uniform01(), 10);
    }

    #[test]
    fn ks_normal() {
        assert_ks_passes(Distribution::normal(-1.0, 4.0).unwrap(), 11);
    }

    #[test]
    fn ks_log_normal() {
        assert_ks_passes(Distribution::log_normal(0.5, 0.8).unwrap(), 12);
    }

    #[test]
    fn ks_gamma_shape_below_one() {
        assert_ks_passes(Distribution::gamma(0.4, 2.0).unwrap(), 13);
    }

    #[test]
    fn ks_gamma_shape_above_one() {
        assert_ks_passes(Distribution::gamma(3.0, 0.5).unwrap(), 14);
    }

    #[test]
    fn ks_exponential() {
        assert_ks_passes(Distribution::exponential(1.7).unwrap(), 15);
    }

    #[test]
    fn chi_square_bernoulli() {
        let dist = Distribution::bernoulli(0.25).unwrap();
        let samples = draws(&dist, 100_000, 16);
        let ones = samples.iter().filter(|v| **v == 1.0).count() as u64;
        let observed = [samples.len() as u64 - ones, ones];
        let report = chi_square_gof(&observed, &[0.75, 0.25], KS_SIGNIFICANCE).unwrap();
        assert_eq!(report.verdict, Verdict::Consistent);
    }

    #[test]
    fn chi_square_discrete() {
        let weights = vec![0.1, 0.0, 0.5, 0.4];
        let dist = Distribution::discrete(weights.clone()).unwrap();
        let samples = draws(&dist, 100_000, 17);
        let mut observed = vec![0u64; weights.len()];
        for s in &samples {
            observed[*s as usize] += 1;
        }
        let report = chi_square_gof(&observed, &weights, KS_SIGNIFICANCE).unwrap();
        assert_eq!(report.verdict, Verdict::Consistent);
    }

    #[test]
    fn discrete_never_emits_zero_weight_index() {
        let dist = Distribution::discrete(vec![0.5, 0.0, 0.5]).unwrap();
        let samples = draws(&dist, 10_000, 18);
        assert!(samples.iter().all(|v| *v != 1.0));
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(Distribution::gamma(0.0, 1.0).is_err());
        assert!(Distribution::gamma(1.0, -2.0).is_err());
        assert!(Distribution::exponential(0.0).is_err());
        assert!(Distribution::bernoulli(1.5).is_err());
        assert!(Distribution::normal(0.0, -1.0).is_err());
        assert!(Distribution::normal(f64::NAN, 1.0).is_err());
        assert!(Distribution::discrete(vec![]).is_err());
        assert!(Distribution::discrete(vec![0.3, 0.3]).is_err());
        assert!(Distribution::discrete(vec![-0.5, 1.5]).is_err());
    }

    #[test]
    fn inverse_transform_identity_and_exponential() {
        assert_eq!(inverse_transform(|u| u, 0.3).unwrap(), 0.3);
        let q_exp = |u: f64| -(1.0 - u).ln();
        let x = inverse_transform(q_exp, 0.5).unwrap();
        assert!((x - std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn inverse_transform_step_quantile() {
        // generalized inverse of the Bernoulli(0.25) CDF
        let q = |u: f64| if u <= 0.75 { 0.0 } else { 1.0 };
        assert_eq!(inverse_transform(q, 0.2).unwrap(), 0.0);
        assert_eq!(inverse_transform(q, 0.9).unwrap(), 1.0);
    }

    #[test]
    fn inverse_transform_rejects_out_of_range() {
        assert!(inverse_transform(|u| u, -0.1).is_err());
        assert!(inverse_transform(|u| u, 1.1).is_err());
    }

    #[test]
    fn sampling_is_reproducible() {
        let dist = Distribution::gamma(0.7, 1.3).unwrap();
        assert_eq!(draws(&dist, 100, 99), draws(&dist, 100, 99));
    }
}
