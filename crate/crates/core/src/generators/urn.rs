//! Urn schemes with per-color reinforcement.
//!
//! Ball counts are reals so fractional reinforcement is representable.

use super::GeneratorError;
use crate::rng::RngStream;
use crate::sequence::SequenceSample;

/// An urn: per-color ball counts plus the number of balls added back on a
/// draw of each color.
#[derive(Debug, Clone, PartialEq)]
pub struct UrnState {
    counts: Vec<f64>,
    reinforcement: Vec<f64>,
}

impl UrnState {
    pub fn new(counts: Vec<f64>, reinforcement: Vec<f64>) -> Result<Self, GeneratorError> {
        if counts.len() < 2 {
            return Err(GeneratorError::TooFewColors(counts.len()));
        }
        if counts.len() != reinforcement.len() {
            return Err(GeneratorError::LengthMismatch {
                counts: counts.len(),
                reinforcement: reinforcement.len(),
            });
        }
        for (i, c) in counts.iter().enumerate() {
            if !c.is_finite() || *c <= 0.0 {
                return Err(GeneratorError::BadCount(*c, i));
            }
        }
        for (i, r) in reinforcement.iter().enumerate() {
            if !r.is_finite() || *r < 0.0 {
                return Err(GeneratorError::BadReinforcement(*r, i));
            }
        }
        Ok(Self { counts, reinforcement })
    }

    /// Urn with one ball of each of `colors` colors and reinforcement `f`
    /// for every color.
    pub fn uniform(colors: usize, f: f64) -> Result<Self, GeneratorError> {
        Self::new(vec![1.0; colors], vec![f; colors])
    }

    pub fn counts(&self) -> &[f64] {
        &self.counts
    }

    pub fn reinforcement(&self) -> &[f64] {
        &self.reinforcement
    }

    pub fn n_colors(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> f64 {
        self.counts.iter().sum()
    }
}

/// Draw one ball with probability proportional to the current counts, then
/// add that color's reinforcement. Returns the drawn color.
pub fn polya_draw(state: &mut UrnState, rng: &mut RngStream) -> usize {
    let total = state.total();
    let target = rng.next_f64() * total;
    let mut acc = 0.0;
    let mut drawn = state.counts.len() - 1;
    for (i, c) in state.counts.iter().enumerate() {
        acc += c;
        if target < acc {
            drawn = i;
            break;
        }
    }
    state.counts[drawn] += state.reinforcement[drawn];
    drawn
}

/// Binary draw sequence of the two-color unit-reinforcement urn started
/// from one ball of each color; outcome 1 records a draw of color 0.
pub fn polya_binary_sequence(n: usize, rng: &mut RngStream) -> SequenceSample {
    let mut state = UrnState::uniform(2, 1.0).expect("static parameters");
    let values = (0..n)
        .map(|_| if polya_draw(&mut state, rng) == 0 { 1 } else { 0 })
        .collect();
    SequenceSample::integer("polya-binary", values)
}

/// Vector-valued draw record of a general urn: each step yields the one-hot
/// indicator of the drawn color, with the urn reinforced per `polya_draw`.
pub fn multicolor_urn_sequence(
    init: &UrnState,
    n: usize,
    rng: &mut RngStream,
) -> SequenceSample {
    let mut state = init.clone();
    let width = state.n_colors();
    let rows = (0..n)
        .map(|_| {
            let drawn = polya_draw(&mut state, rng);
            let mut row = vec![0i64; width];
            row[drawn] = 1;
            row
        })
        .collect();
    SequenceSample::integer_vector("multicolor-urn", width, rows)
        .expect("rows are one-hot of fixed width")
}
