//! Binary success/failure sequences: the talent-Bernoulli model and two
//! reinforcement schemes tracked through a focal entity.

use super::GeneratorError;
use crate::dist::Distribution;
use crate::rng::RngStream;
use crate::sequence::SequenceSample;

/// Parameters of the talent model: a latent success probability drawn once
/// per sequence from a distribution supported on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TalentBinaryParams {
    talent_dist: Distribution,
}

impl TalentBinaryParams {
    pub fn new(talent_dist: Distribution) -> Result<Self, GeneratorError> {
        let (lo, hi) = talent_dist.support();
        if lo < 0.0 || hi > 1.0 {
            return Err(GeneratorError::TalentSupport { lo, hi });
        }
        Ok(Self { talent_dist })
    }

    pub fn talent_dist(&self) -> &Distribution {
        &self.talent_dist
    }
}

/// Draw a talent `p` once, then emit `n` conditionally independent
/// Bernoulli(`p`) outcomes.
pub fn talent_binary_sequence(
    params: &TalentBinaryParams,
    n: usize,
    rng: &mut RngStream,
) -> SequenceSample {
    let p = params.talent_dist.sample(rng);
    let values = (0..n).map(|_| if rng.next_f64() < p { 1 } else { 0 }).collect();
    SequenceSample::integer("talent-binary", values)
}

/// Independent Bernoulli(`p`) outcomes; the i.i.d. reference model.
pub fn iid_bernoulli_sequence(p: f64, n: usize, rng: &mut RngStream) -> SequenceSample {
    let values = (0..n).map(|_| if rng.next_f64() < p { 1 } else { 0 }).collect();
    SequenceSample::integer("iid-bernoulli", values)
}

/// Success run with absorbing failure: step `k` succeeds with probability
/// `k/(k+1)` only while every earlier step succeeded; after the first
/// failure the sequence stays at zero.
pub fn price_sequence(n: usize, rng: &mut RngStream) -> SequenceSample {
    let mut alive = true;
    let values = (0..n)
        .map(|k| {
            let step = (k + 1) as f64;
            if alive && rng.next_f64() < step / (step + 1.0) {
                1
            } else {
                alive = false;
                0
            }
        })
        .collect();
    SequenceSample::integer("price", values)
}

/// Occurrence sequence of a focal word under a reinforcement process with
/// innovation rate `alpha`: at step `k` (1-based), the word recurs with
/// probability `(1 - alpha) * (n_r0 + previous occurrences) / (k - 1 + k0)`.
pub fn simon_occurrence_sequence(
    alpha: f64,
    n_r0: u32,
    k0: u32,
    n: usize,
    rng: &mut RngStream,
) -> Result<SequenceSample, GeneratorError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(GeneratorError::NotInOpenUnitInterval { name: "alpha", value: alpha });
    }
    if n_r0 == 0 {
        return Err(GeneratorError::ZeroParam { name: "n_r0" });
    }
    if k0 == 0 {
        return Err(GeneratorError::ZeroParam { name: "k0" });
    }
    if n_r0 > k0 {
        return Err(GeneratorError::SimonInitialCounts { n_r0, k0 });
    }
    let mut occurrences = 0u64;
    let values = (1..=n)
        .map(|k| {
            let p = (1.0 - alpha) * (f64::from(n_r0) + occurrences as f64)
                / (k as f64 - 1.0 + f64::from(k0));
            if rng.next_f64() < p {
                occurrences += 1;
                1
            } else {
                0
            }
        })
        .collect();
    Ok(SequenceSample::integer("simon", values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_mass_talent_gives_all_ones() {
        let params = TalentBinaryParams::new(Distribution::bernoulli(1.0).unwrap()).unwrap();
        let mut rng = RngStream::new(0);
        let s = talent_binary_sequence(&params, 20, &mut rng);
        assert!(s.as_integer().unwrap().iter().all(|y| *y == 1));
    }

    #[test]
    fn talent_support_validation() {
        assert!(TalentBinaryParams::new(Distribution::uniform01()).is_ok());
        assert!(TalentBinaryParams::new(Distribution::normal(0.5, 1.0).unwrap()).is_err());
        assert!(TalentBinaryParams::new(Distribution::exponential(1.0).unwrap()).is_err());
    }

    #[test]
    fn uniform_talent_path_law_matches_beta_integral() {
        // P(k ones in m draws along a fixed path) = k!(m-k)!/(m+1)!
        let params = TalentBinaryParams::new(Distribution::uniform01()).unwrap();
        let root = RngStream::new(1);
        let reps = 300_000u32;
        let m = 3usize;
        let mut count_11 = 0u64;
        let mut count_101 = 0u64;
        for i in 0..reps {
            let mut rng = root.split(i);
            let s = talent_binary_sequence(&params, m, &mut rng);
            let v = s.as_integer().unwrap();
            if v[0] == 1 && v[1] == 1 {
                count_11 += 1;
            }
            if v == [1, 0, 1] {
                count_101 += 1;
            }
        }
        let f11 = count_11 as f64 / reps as f64;
        assert!((f11 - 1.0 / 3.0).abs() < 0.004, "P(1,1) = {f11}");
        let f101 = count_101 as f64 / reps as f64;
        assert!((f101 - 1.0 / 12.0).abs() < 0.003, "P(1,0,1) = {f101}");
    }

    #[test]
    fn price_first_two_probabilities() {
        let root = RngStream::new(2);
        let reps = 200_000u32;
        let (mut one, mut one_one) = (0u64, 0u64);
        for i in 0..reps {
            let mut rng = root.split(i);
            let s = price_sequence(2, &mut rng);
            let v = s.as_integer().unwrap();
            if v[0] == 1 {
                one += 1;
                if v[1] == 1 {
                    one_one += 1;
                }
            }
        }
        let f1 = one as f64 / reps as f64;
        let f11 = one_one as f64 / reps as f64;
        assert!((f1 - 0.5).abs() < 0.004, "P(Y1=1) = {f1}");
        assert!((f11 - 1.0 / 3.0).abs() < 0.004, "P(Y1=1,Y2=1) = {f11}");
    }

    #[test]
    fn price_failure_is_absorbing() {
        let root = RngStream::new(3);
        for i in 0..5_000 {
            let mut rng = root.split(i);
            let s = price_sequence(12, &mut rng);
            let v = s.as_integer().unwrap();
            if let Some(first_zero) = v.iter().position(|y| *y == 0) {
                assert!(v[first_zero..].iter().all(|y| *y == 0), "pattern (0,1) in {v:?}");
            }
        }
    }

    #[test]
    fn simon_first_step_formula() {
        // P(Y_1 = 1) = (1 - alpha) * n_r0 / k0
        let root = RngStream::new(4);
        let reps = 200_000u32;
        let mut hits = 0u64;
        for i in 0..reps {
            let mut rng = root.split(i);
            let s = simon_occurrence_sequence(0.5, 1, 2, 1, &mut rng).unwrap();
            hits += s.as_integer().unwrap()[0] as u64;
        }
        let freq = hits as f64 / reps as f64;
        assert!((freq - 0.25).abs() < 0.004, "freq = {freq}");
    }

    #[test]
    fn simon_conditional_law_matches_formula() {
        let root = RngStream::new(5);
        let reps = 200_000u32;
        let (alpha, n_r0, k0) = (0.3, 1u32, 3u32);
        let m = 6usize;
        let mut hits = vec![vec![0u64; m]; m];
        let mut totals = vec![vec![0u64; m]; m];
        for i in 0..reps {
            let mut rng = root.split(i);
            let s = simon_occurrence_sequence(alpha, n_r0, k0, m, &mut rng).unwrap();
            let v = s.as_integer().unwrap();
            let mut sum = 0usize;
            for (k, y) in v.iter().enumerate() {
                totals[k][sum] += 1;
                if *y == 1 {
                    hits[k][sum] += 1;
                }
                sum += *y as usize;
            }
        }
        for k in 0..m {
            for s in 0..=k {
                let n = totals[k][s];
                if n < 100 {
                    continue;
                }
                let expected = (1.0 - alpha) * (f64::from(n_r0) + s as f64)
                    / (k as f64 + f64::from(k0));
                let freq = hits[k][s] as f64 / n as f64;
                let se = (expected * (1.0 - expected) / n as f64).sqrt();
                assert!(
                    (freq - expected).abs() < 3.5 * se,
                    "k={k} s={s}: freq={freq} expected={expected}"
                );
            }
        }
    }

    #[test]
    fn simon_conditional_probability_monotone_in_history() {
        // direct formula check, no sampling needed
        let p = |s: f64, k: f64| 0.5 * (1.0 + s) / (k - 1.0 + 2.0);
        for k in 1..=10 {
            for s in 0..k - 1 {
                assert!(p(s as f64, k as f64) <= p(s as f64 + 1.0, k as f64));
            }
        }
    }

    #[test]
    fn simon_validation() {
        let mut rng = RngStream::new(6);
        assert!(simon_occurrence_sequence(0.0, 1, 2, 5, &mut rng).is_err());
        assert!(simon_occurrence_sequence(1.0, 1, 2, 5, &mut rng).is_err());
        assert!(simon_occurrence_sequence(0.5, 3, 2, 5, &mut rng).is_err());
        assert!(simon_occurrence_sequence(0.5, 0, 2, 5, &mut rng).is_err());
    }

    #[test]
    fn iid_bernoulli_frequency() {
        let mut rng = RngStream::new(7);
        let s = iid_bernoulli_sequence(0.5, 100_000, &mut rng);
        let ones: i64 = s.as_integer().unwrap().iter().sum();
        let freq = ones as f64 / 100_000.0;
        assert!((freq - 0.5).abs() < 0.006, "freq = {freq}");
    }
}
