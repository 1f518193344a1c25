//! Verification of a claimed conditional law: bin realizations by the
//! predicted conditional mean of the next value, then compare empirical
//! bin moments against the prediction.

use super::{ComparisonReport, TestError};
use statrs::distribution::ContinuousCDF;

const MIN_BIN_OCCUPANCY: usize = 50;

/// Check that the value at `position` (0-based) of each sequence follows
/// the conditional law `predictor(history) -> (mean, variance)` given the
/// preceding values.
///
/// Sequences are grouped into `bins` equal-occupancy bins by predicted
/// mean. Within a bin the outcome's expected mean is the average predicted
/// mean and its expected variance is the average predicted variance plus
/// the spread of predicted means; z-scores of both moments are aggregated
/// into a chi-square statistic with `2 * bins` degrees of freedom.
pub fn conditional_moment_check(
    samples: &[Vec<f64>],
    position: usize,
    predictor: impl Fn(&[f64]) -> (f64, f64),
    bins: usize,
    significance: f64,
) -> Result<ComparisonReport, TestError> {
    if samples.is_empty() {
        return Err(TestError::EmptySample);
    }
    if bins == 0 {
        return Err(TestError::DegenerateCells);
    }
    let len = samples[0].len();
    if position >= len {
        return Err(TestError::PositionOutOfRange { position, len });
    }
    let mut predicted: Vec<(f64, f64, f64)> = Vec::with_capacity(samples.len());
    for s in samples {
        if s.len() != len {
            return Err(TestError::LengthMismatch(len, s.len()));
        }
        let (mean, variance) = predictor(&s[..position]);
        predicted.push((mean, variance, s[position]));
    }
    predicted.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite predictions"));

    let n = predicted.len();
    let base = n / bins;
    let remainder = n % bins;
    if base < MIN_BIN_OCCUPANCY {
        return Err(TestError::InsufficientBinOccupancy { needed: MIN_BIN_OCCUPANCY, got: base });
    }

    let mut statistic = 0.0;
    let mut start = 0usize;
    for b in 0..bins {
        let size = base + usize::from(b < remainder);
        let chunk = &predicted[start..start + size];
        start += size;
        let nb = chunk.len() as f64;

        let pred_mean = chunk.iter().map(|(m, _, _)| m).sum::<f64>() / nb;
        let pred_var_avg = chunk.iter().map(|(_, v, _)| v).sum::<f64>() / nb;
        let pred_mean_spread =
            chunk.iter().map(|(m, _, _)| (m - pred_mean).powi(2)).sum::<f64>() / nb;
        let target_var = pred_var_avg + pred_mean_spread;

        let emp_mean = chunk.iter().map(|(_, _, y)| y).sum::<f64>() / nb;
        let emp_var =
            chunk.iter().map(|(_, _, y)| (y - emp_mean).powi(2)).sum::<f64>() / (nb - 1.0);

        let z_mean = (emp_mean - pred_mean) / (target_var / nb).sqrt();
        let z_var = (emp_var - target_var) / (2.0 * target_var * target_var / (nb - 1.0)).sqrt();
        statistic += z_mean * z_mean + z_var * z_var;
    }

    let df = 2 * bins;
    let p_value = statrs::distribution::ChiSquared::new(df as f64)
        .expect("df >= 2")
        .sf(statistic)
        .clamp(0.0, 1.0);
    Ok(ComparisonReport::from_p_value(
        "conditional-moments",
        statistic,
        p_value,
        samples.len() as u64,
        samples.len() as u64,
        significance,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::Verdict;
    use crate::gaussian::{q_model_sequence, twin_conditional_law, twin_sequence, QModelParams, TwinParams};
    use crate::rng::RngStream;

    fn collect(
        sampler: impl Fn(&mut RngStream) -> Vec<f64>,
        reps: u32,
        seed: u64,
    ) -> Vec<Vec<f64>> {
        let root = RngStream::new(seed);
        (0..reps)
            .map(|i| {
                let mut rng = root.split(i);
                sampler(&mut rng)
            })
            .collect()
    }

    #[test]
    fn twin_data_self_consistent() {
        let params = TwinParams::new(0.0, 1.0, 1.0).unwrap();
        let samples =
            collect(|rng| twin_sequence(&params, 4, rng).as_real().unwrap().to_vec(), 20_000, 0);
        for position in 1..4 {
            let report = conditional_moment_check(
                &samples,
                position,
                |history| twin_conditional_law(&params, history),
                10,
                1e-3,
            )
            .unwrap();
            assert_eq!(report.verdict, Verdict::Consistent, "position {position}");
        }
    }

    #[test]
    fn q_model_data_matches_twin_law() {
        let q = QModelParams::new(0.0, 1.0, 1.0).unwrap();
        let twin = crate::gaussian::twin_from_q(&q);
        let samples =
            collect(|rng| q_model_sequence(&q, 4, rng).as_real().unwrap().to_vec(), 20_000, 1);
        let report = conditional_moment_check(
            &samples,
            3,
            |history| twin_conditional_law(&twin, history),
            10,
            1e-3,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Consistent, "p = {}", report.p_value_or_distance);
    }

    #[test]
    fn wrong_predictor_rejected() {
        let q = QModelParams::new(0.0, 1.0, 1.0).unwrap();
        let wrong = TwinParams::new(0.0, 1.0, 2.0).unwrap(); // c doubled
        let samples =
            collect(|rng| q_model_sequence(&q, 4, rng).as_real().unwrap().to_vec(), 20_000, 2);
        let report = conditional_moment_check(
            &samples,
            2,
            |history| twin_conditional_law(&wrong, history),
            10,
            1e-3,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Rejected, "p = {}", report.p_value_or_distance);
    }

    #[test]
    fn input_validation() {
        let samples = vec![vec![0.0, 1.0]; 100];
        assert!(matches!(
            conditional_moment_check(&samples, 5, |_| (0.0, 1.0), 2, 1e-3),
            Err(TestError::PositionOutOfRange { .. })
        ));
        assert!(matches!(
            conditional_moment_check(&samples, 1, |_| (0.0, 1.0), 10, 1e-3),
            Err(TestError::InsufficientBinOccupancy { .. })
        ));
        assert!(conditional_moment_check(&[], 0, |_| (0.0, 1.0), 2, 1e-3).is_err());
    }
}
