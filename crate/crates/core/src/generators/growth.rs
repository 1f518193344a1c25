//! Growth processes: the focal-node degree path of a preferential-attachment
//! network and multiplicative (proportional-growth) size paths.

use super::GeneratorError;
use crate::dist::{inverse_transform, Distribution};
use crate::rng::RngStream;
use crate::sequence::SequenceSample;

/// Degree path of the node entering a preferential-attachment network at
/// `t_entry`: zero before entry, one at entry, and afterwards one new link
/// at time `t` with probability `degree / (2 (t + m0))`.
///
/// The returned sample holds the degree at times `1..=t_end`.
pub fn ba_degree_sequence(
    m0: u32,
    t_entry: u32,
    t_end: u32,
    rng: &mut RngStream,
) -> Result<SequenceSample, GeneratorError> {
    if m0 == 0 {
        return Err(GeneratorError::ZeroParam { name: "m0" });
    }
    if t_entry == 0 {
        return Err(GeneratorError::ZeroParam { name: "t_entry" });
    }
    if t_entry > t_end {
        return Err(GeneratorError::EntryAfterEnd { t_entry, t_end });
    }
    let mut degree = 0i64;
    let values = (1..=t_end)
        .map(|t| {
            if t == t_entry {
                degree = 1;
            } else if t > t_entry {
                let p = degree as f64 / (2.0 * (f64::from(t) + f64::from(m0)));
                if rng.next_f64() < p {
                    degree += 1;
                }
            }
            degree
        })
        .collect();
    Ok(SequenceSample::integer("ba-degree", values))
}

fn gibrat_path(y0: f64, n: usize, mut growth: impl FnMut(&mut RngStream) -> f64, rng: &mut RngStream) -> Vec<f64> {
    let mut y = y0;
    (0..n)
        .map(|_| {
            y *= 1.0 + growth(rng);
            y
        })
        .collect()
}

/// Multiplicative growth path `Y_k = Y_{k-1} (1 + X_k)` with i.i.d. growth
/// rates. Growth distributions whose support touches `-1` are rejected so
/// sizes stay strictly positive.
pub fn gibrat_sequence(
    y0: f64,
    growth_dist: &Distribution,
    n: usize,
    rng: &mut RngStream,
) -> Result<SequenceSample, GeneratorError> {
    if !y0.is_finite() || y0 <= 0.0 {
        return Err(GeneratorError::BadInitialSize(y0));
    }
    let (lo, _) = growth_dist.support();
    if lo <= -1.0 {
        return Err(GeneratorError::GrowthSupport { lo });
    }
    let values = gibrat_path(y0, n, |r| growth_dist.sample(r), rng);
    Ok(SequenceSample::real("gibrat", values))
}

/// Multiplicative growth path with the growth law given by its quantile
/// function; each step applies inverse-transform sampling to a fresh
/// uniform draw.
pub fn gibrat_sequence_from_quantile<F: Fn(f64) -> f64>(
    y0: f64,
    quantile: F,
    n: usize,
    rng: &mut RngStream,
) -> Result<SequenceSample, GeneratorError> {
    if !y0.is_finite() || y0 <= 0.0 {
        return Err(GeneratorError::BadInitialSize(y0));
    }
    let lo = quantile(0.0);
    if lo <= -1.0 {
        return Err(GeneratorError::GrowthSupport { lo });
    }
    let values = gibrat_path(
        y0,
        n,
        |r| {
            let u = r.next_f64();
            inverse_transform(&quantile, u).expect("u lies in [0, 1)")
        },
        rng,
    );
    Ok(SequenceSample::real("gibrat", values))
}
