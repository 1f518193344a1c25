//! Random-typing model: occurrences of a tracked word when keys are pressed
//! uniformly at random with a dedicated space-key probability.

use super::GeneratorError;
use crate::rng::RngStream;
use crate::sequence::SequenceSample;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonkeyParams {
    space_prob: f64,
    alphabet_size: u32,
    max_length: u32,
}

impl MonkeyParams {
    pub fn new(space_prob: f64, alphabet_size: u32, max_length: u32) -> Result<Self, GeneratorError> {
        if !(space_prob > 0.0 && space_prob < 1.0) {
            return Err(GeneratorError::NotInOpenUnitInterval {
                name: "space_prob",
                value: space_prob,
            });
        }
        if alphabet_size == 0 {
            return Err(GeneratorError::ZeroParam { name: "alphabet_size" });
        }
        if max_length == 0 {
            return Err(GeneratorError::ZeroParam { name: "max_length" });
        }
        Ok(Self { space_prob, alphabet_size, max_length })
    }

    pub fn space_prob(&self) -> f64 {
        self.space_prob
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn max_length(&self) -> u32 {
        self.max_length
    }

    /// Per-step probability of producing a fixed word of length `k`:
    /// `((1 - space_prob) / alphabet_size)^k * space_prob`.
    pub fn word_probability(&self, word_length: u32) -> Result<f64, GeneratorError> {
        if word_length == 0 || word_length > self.max_length {
            return Err(GeneratorError::WordLength {
                word_len: word_length,
                max_len: self.max_length,
            });
        }
        let per_char = (1.0 - self.space_prob) / f64::from(self.alphabet_size);
        Ok(per_char.powi(word_length as i32) * self.space_prob)
    }
}

/// I.i.d. occurrence indicators of a fixed word of length `word_length`.
pub fn monkey_occurrence_sequence(
    params: &MonkeyParams,
    word_length: u32,
    n: usize,
    rng: &mut RngStream,
) -> Result<SequenceSample, GeneratorError> {
    let q = params.word_probability(word_length)?;
    let values = (0..n).map(|_| if rng.next_f64() < q { 1 } else { 0 }).collect();
    Ok(SequenceSample::integer("monkey", values))
}

/// Length of a word chosen uniformly among all words of length at most
/// `max_length`: length `k` has probability proportional to `alphabet^k`.
pub fn monkey_random_word_length(params: &MonkeyParams, rng: &mut RngStream) -> u32 {
    let n = f64::from(params.alphabet_size);
    let k_max = params.max_length;
    // normalize by n^k_max so the weights n^(k - k_max) stay finite
    let weights: Vec<f64> = (1..=k_max).map(|k| n.powi(k as i32 - k_max as i32)).collect();
    let total: f64 = weights.iter().sum();
    let target = rng.next_f64() * total;
    let mut acc = 0.0;
    for (i, w) in weights.iter().enumerate() {
        acc += w;
        if target < acc {
            return i as u32 + 1;
        }
    }
    k_max
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_probability_formula() {
        let params = MonkeyParams::new(0.2, 26, 5).unwrap();
        let q = params.word_probability(1).unwrap();
        assert!((q - 0.8 / 26.0 * 0.2).abs() < 1e-12);
    }

    #[test]
    fn occurrence_frequency_clt_bound() {
        let params = MonkeyParams::new(0.2, 26, 5).unwrap();
        let q = params.word_probability(1).unwrap();
        let mut rng = RngStream::new(0);
        let n = 1_000_000usize;
        let s = monkey_occurrence_sequence(&params, 1, n, &mut rng).unwrap();
        let freq = s.as_integer().unwrap().iter().sum::<i64>() as f64 / n as f64;
        assert!((freq - q).abs() < 3.0 * (q / n as f64).sqrt(), "freq = {freq}");
    }

    #[test]
    fn occurrences_at_distinct_positions_uncorrelated() {
        let params = MonkeyParams::new(0.35, 3, 4).unwrap();
        let root = RngStream::new(1);
        let reps = 1_000_000u32;
        let (mut s1, mut s2, mut s12) = (0.0, 0.0, 0.0);
        let mut rng = root.split(0);
        for _ in 0..reps {
            let s = monkey_occurrence_sequence(&params, 1, 2, &mut rng).unwrap();
            let v = s.as_integer().unwrap();
            let (a, b) = (v[0] as f64, v[1] as f64);
            s1 += a;
            s2 += b;
            s12 += a * b;
        }
        let nf = reps as f64;
        let (m1, m2) = (s1 / nf, s2 / nf);
        let cov = s12 / nf - m1 * m2;
        let corr = cov / ((m1 * (1.0 - m1)) * (m2 * (1.0 - m2))).sqrt();
        assert!(corr.abs() < 0.01, "corr = {corr}");
    }

    #[test]
    fn word_length_uniform_when_alphabet_is_one() {
        let params = MonkeyParams::new(0.5, 1, 3).unwrap();
        let root = RngStream::new(2);
        let reps = 120_000u32;
        let mut counts = [0u64; 3];
        for i in 0..reps {
            let mut rng = root.split(i);
            let k = monkey_random_word_length(&params, &mut rng);
            counts[(k - 1) as usize] += 1;
        }
        for c in counts {
            let freq = c as f64 / reps as f64;
            assert!((freq - 1.0 / 3.0).abs() < 0.006, "freq = {freq}");
        }
    }

    #[test]
    fn word_length_weights_for_binary_alphabet() {
        // alphabet 2, max length 2: P(1) = 1/3, P(2) = 2/3
        let params = MonkeyParams::new(0.5, 2, 2).unwrap();
        let root = RngStream::new(3);
        let reps = 120_000u32;
        let mut ones = 0u64;
        for i in 0..reps {
            let mut rng = root.split(i);
            if monkey_random_word_length(&params, &mut rng) == 1 {
                ones += 1;
            }
        }
        let freq = ones as f64 / reps as f64;
        assert!((freq - 1.0 / 3.0).abs() < 0.005, "freq = {freq}");
    }

    #[test]
    fn word_length_always_in_range() {
        let params = MonkeyParams::new(0.1, 26, 7).unwrap();
        let mut rng = RngStream::new(4);
        for _ in 0..10_000 {
            let k = monkey_random_word_length(&params, &mut rng);
            assert!((1..=7).contains(&k));
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(MonkeyParams::new(0.0, 26, 5).is_err());
        assert!(MonkeyParams::new(1.0, 26, 5).is_err());
        assert!(MonkeyParams::new(0.2, 0, 5).is_err());
        assert!(MonkeyParams::new(0.2, 26, 0).is_err());
        let params = MonkeyParams::new(0.2, 26, 5).unwrap();
        assert!(params.word_probability(0).is_err());
        assert!(params.word_probability(6).is_err());
    }
}
