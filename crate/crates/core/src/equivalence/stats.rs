//! Classical tests: chi-square goodness of fit and homogeneity, one- and
//! two-sample Kolmogorov-Smirnov, and sample covariance.

use super::{ComparisonReport, TestError};
use statrs::distribution::ContinuousCDF;

/// Minimum expected count per chi-square cell; smaller cells are pooled.
const MIN_EXPECTED: f64 = 5.0;

/// Survival function of the Kolmogorov distribution, via the standard dual
/// series (power series near zero, alternating series in the tail).
pub fn kolmogorov_sf(z: f64) -> f64 {
    if z <= 0.0 {
        return 1.0;
    }
    if z < 1.18 {
        let t = (-std::f64::consts::PI * std::f64::consts::PI / (8.0 * z * z)).exp();
        let sum = t + t.powi(9) + t.powi(25) + t.powi(49);
        1.0 - (2.0 * std::f64::consts::PI).sqrt() / z * sum
    } else {
        let t = (-2.0 * z * z).exp();
        (2.0 * (t - t.powi(4) + t.powi(9) - t.powi(16))).clamp(0.0, 1.0)
    }
}

fn chi2_sf(statistic: f64, df: usize) -> f64 {
    statrs::distribution::ChiSquared::new(df as f64)
        .expect("df >= 1")
        .sf(statistic)
        .clamp(0.0, 1.0)
}

/// Pearson goodness-of-fit test of observed counts against expected cell
/// probabilities. Cells with expected count below 5 are pooled into a tail
/// cell.
pub fn chi_square_gof(
    observed: &[u64],
    expected: &[f64],
    significance: f64,
) -> Result<ComparisonReport, TestError> {
    if observed.len() != expected.len() {
        return Err(TestError::LengthMismatch(observed.len(), expected.len()));
    }
    let expected_sum: f64 = expected.iter().sum();
    if (expected_sum - 1.0).abs() > 1e-6 || expected.iter().any(|p| *p < 0.0) {
        return Err(TestError::BadExpected(expected_sum));
    }
    let total: u64 = observed.iter().sum();
    if total == 0 {
        return Err(TestError::EmptySample);
    }
    let n = total as f64;

    let mut statistic = 0.0;
    let mut cells = 0usize;
    let (mut pooled_obs, mut pooled_exp) = (0.0, 0.0);
    for (obs, p) in observed.iter().zip(expected) {
        let exp_count = p * n;
        if exp_count < MIN_EXPECTED {
            pooled_obs += *obs as f64;
            pooled_exp += exp_count;
        } else {
            statistic += (*obs as f64 - exp_count).powi(2) / exp_count;
            cells += 1;
        }
    }
    if pooled_exp > 0.0 {
        statistic += (pooled_obs - pooled_exp).powi(2) / pooled_exp;
        cells += 1;
    }
    if cells < 2 {
        return Err(TestError::DegenerateCells);
    }
    let p_value = chi2_sf(statistic, cells - 1);
    Ok(ComparisonReport::from_p_value(
        "chi-square-gof",
        statistic,
        p_value,
        total,
        total,
        significance,
    ))
}

/// Chi-square homogeneity test of two count vectors over the same cells.
/// Cells whose pooled expected count (under either sample) falls below 5
/// are merged into a tail cell.
pub fn chi_square_two_sample(
    a: &[u64],
    b: &[u64],
    significance: f64,
) -> Result<ComparisonReport, TestError> {
    if a.len() != b.len() {
        return Err(TestError::LengthMismatch(a.len(), b.len()));
    }
    let na: u64 = a.iter().sum();
    let nb: u64 = b.iter().sum();
    if na == 0 || nb == 0 {
        return Err(TestError::EmptySample);
    }
    let (na_f, nb_f) = (na as f64, nb as f64);
    let total = na_f + nb_f;
    let min_n = na_f.min(nb_f);

    let mut statistic = 0.0;
    let mut cells = 0usize;
    let (mut pool_a, mut pool_b) = (0.0, 0.0);
    let mut add_cell = |obs_a: f64, obs_b: f64, statistic: &mut f64, cells: &mut usize| {
        let p_hat = (obs_a + obs_b) / total;
        if p_hat == 0.0 {
            return;
        }
        *statistic += (obs_a - na_f * p_hat).powi(2) / (na_f * p_hat)
            + (obs_b - nb_f * p_hat).powi(2) / (nb_f * p_hat);
        *cells += 1;
    };
    for (ca, cb) in a.iter().zip(b) {
        let (ca, cb) = (*ca as f64, *cb as f64);
        let expected_min = (ca + cb) / total * min_n;
        if expected_min < MIN_EXPECTED {
            pool_a += ca;
            pool_b += cb;
        } else {
            add_cell(ca, cb, &mut statistic, &mut cells);
        }
    }
    if pool_a + pool_b > 0.0 {
        add_cell(pool_a, pool_b, &mut statistic, &mut cells);
    }
    if cells < 2 {
        return Err(TestError::DegenerateCells);
    }
    let p_value = chi2_sf(statistic, cells - 1);
    Ok(ComparisonReport::from_p_value(
        "chi-square-two-sample",
        statistic,
        p_value,
        na,
        nb,
        significance,
    ))
}

fn sorted(values: &[f64]) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).expect("samples must not contain NaN"));
    v
}

/// Small-sample correction factor from the asymptotic Kolmogorov law.
fn ks_p_value(statistic: f64, effective_n: f64) -> f64 {
    let sqrt_n = effective_n.sqrt();
    kolmogorov_sf((sqrt_n + 0.12 + 0.11 / sqrt_n) * statistic)
}

/// Two-sample Kolmogorov-Smirnov test: sup distance between empirical CDFs
/// with the asymptotic p-value.
pub fn ks_two_sample(
    a: &[f64],
    b: &[f64],
    significance: f64,
) -> Result<ComparisonReport, TestError> {
    if a.is_empty() || b.is_empty() {
        return Err(TestError::EmptySample);
    }
    let xs = sorted(a);
    let ys = sorted(b);
    let (mut i, mut j) = (0usize, 0usize);
    let mut statistic = 0.0f64;
    while i < xs.len() && j < ys.len() {
        let x = xs[i];
        let y = ys[j];
        let v = x.min(y);
        while i < xs.len() && xs[i] <= v {
            i += 1;
        }
        while j < ys.len() && ys[j] <= v {
            j += 1;
        }
        let diff = (i as f64 / xs.len() as f64 - j as f64 / ys.len() as f64).abs();
        statistic = statistic.max(diff);
    }
    let effective_n = (xs.len() * ys.len()) as f64 / (xs.len() + ys.len()) as f64;
    let p_value = ks_p_value(statistic, effective_n);
    Ok(ComparisonReport::from_p_value(
        "ks-two-sample",
        statistic,
        p_value,
        a.len() as u64,
        b.len() as u64,
        significance,
    ))
}

/// One-sample Kolmogorov-Smirnov test against an analytic CDF.
pub fn ks_one_sample(
    samples: &[f64],
    cdf: impl Fn(f64) -> f64,
    significance: f64,
) -> Result<ComparisonReport, TestError> {
    if samples.is_empty() {
        return Err(TestError::EmptySample);
    }
    let xs = sorted(samples);
    let n = xs.len() as f64;
    let mut statistic = 0.0f64;
    for (i, x) in xs.iter().enumerate() {
        let f = cdf(*x);
        statistic = statistic.max(((i + 1) as f64 / n - f).abs());
        statistic = statistic.max((f - i as f64 / n).abs());
    }
    let p_value = ks_p_value(statistic, n);
    Ok(ComparisonReport::from_p_value(
        "ks-one-sample",
        statistic,
        p_value,
        samples.len() as u64,
        samples.len() as u64,
        significance,
    ))
}

/// Unbiased sample covariance matrix of equal-length sequences.
pub fn covariance_matrix(samples: &[Vec<f64>]) -> Result<Vec<Vec<f64>>, TestError> {
    if samples.len() < 2 {
        return Err(TestError::TooFewSamples { needed: 2, got: samples.len() });
    }
    let m = samples[0].len();
    for s in samples {
        if s.len() != m {
            return Err(TestError::LengthMismatch(m, s.len()));
        }
    }
    let n = samples.len() as f64;
    let mut means = vec![0.0; m];
    for s in samples {
        for (mean, v) in means.iter_mut().zip(s) {
            *mean += v;
        }
    }
    for mean in &mut means {
        *mean /= n;
    }
    let mut cov = vec![vec![0.0; m]; m];
    for s in samples {
        for j in 0..m {
            let dj = s[j] - means[j];
            for k in j..m {
                cov[j][k] += dj * (s[k] - means[k]);
            }
        }
    }
    for j in 0..m {
        for k in j..m {
            cov[j][k] /= n - 1.0;
            cov[k][j] = cov[j][k];
        }
    }
    Ok(cov)
}
