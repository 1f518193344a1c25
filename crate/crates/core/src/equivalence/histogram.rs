//! Path histograms: empirical joint distributions of fixed-length paths,
//! discretized on an explicit grid.

use super::TestError;
use std::collections::BTreeMap;

/// Bucketing rule applied coordinate-wise to a path before counting.
#[derive(Debug, Clone, PartialEq)]
pub enum GridSpec {
    /// Paths of 0/1 outcomes, one bucket per outcome.
    Binary { len: usize },
    /// Non-negative integer outcomes; values at or above `cap` share the
    /// tail bucket.
    IntegerCapped { len: usize, cap: i64 },
    /// Real outcomes; `edges[k]` holds the ascending internal bucket
    /// boundaries for coordinate `k`, giving `edges[k].len() + 1` buckets.
    RealEdges { edges: Vec<Vec<f64>> },
}

impl GridSpec {
    pub fn path_len(&self) -> usize {
        match self {
            GridSpec::Binary { len } | GridSpec::IntegerCapped { len, .. } => *len,
            GridSpec::RealEdges { edges } => edges.len(),
        }
    }

    fn bucket(&self, coord: usize, value: f64) -> Result<u16, TestError> {
        match self {
            GridSpec::Binary { .. } => {
                if value == 0.0 {
                    Ok(0)
                } else if value == 1.0 {
                    Ok(1)
                } else {
                    Err(TestError::NonBinaryValue(value))
                }
            }
            GridSpec::IntegerCapped { cap, .. } => {
                if value < 0.0 || value.fract() != 0.0 {
                    return Err(TestError::NonIntegerValue(value));
                }
                Ok((value as i64).min(*cap) as u16)
            }
            GridSpec::RealEdges { edges } => {
                Ok(edges[coord].partition_point(|e| *e <= value) as u16)
            }
        }
    }

    /// Equal-probability bucket edges per coordinate, estimated from pilot
    /// paths. Duplicate quantiles collapse, so degenerate coordinates get
    /// fewer buckets.
    pub fn equal_probability(pilot: &[Vec<f64>], buckets: usize) -> Result<GridSpec, TestError> {
        if pilot.is_empty() {
            return Err(TestError::EmptySample);
        }
        let m = pilot[0].len();
        let mut edges = Vec::with_capacity(m);
        for coord in 0..m {
            let mut values: Vec<f64> = pilot
                .iter()
                .map(|p| {
                    if p.len() != m {
                        Err(TestError::LengthMismatch(m, p.len()))
                    } else {
                        Ok(p[coord])
                    }
                })
                .collect::<Result<_, _>>()?;
            values.sort_by(|a, b| a.partial_cmp(b).expect("finite outcomes"));
            let n = values.len();
            let mut coord_edges: Vec<f64> = Vec::with_capacity(buckets.saturating_sub(1));
            for i in 1..buckets {
                let edge = values[(i * n / buckets).min(n - 1)];
                if coord_edges.last().map_or(true, |last| edge > *last) {
                    coord_edges.push(edge);
                }
            }
            edges.push(coord_edges);
        }
        Ok(GridSpec::RealEdges { edges })
    }
}

/// Empirical joint distribution over discretized fixed-length paths.
#[derive(Debug, Clone, PartialEq)]
pub struct PathHistogram {
    grid: GridSpec,
    bins: BTreeMap<Vec<u16>, u64>,
    total: u64,
}

impl PathHistogram {
    pub fn new(grid: GridSpec) -> Self {
        Self { grid, bins: BTreeMap::new(), total: 0 }
    }

    pub fn add_path(&mut self, path: &[f64]) -> Result<(), TestError> {
        if path.len() != self.grid.path_len() {
            return Err(TestError::PathLengthMismatch {
                expected: self.grid.path_len(),
                got: path.len(),
            });
        }
        let key = path
            .iter()
            .enumerate()
            .map(|(coord, v)| self.grid.bucket(coord, *v))
            .collect::<Result<Vec<u16>, _>>()?;
        *self.bins.entry(key).or_insert(0) += 1;
        self.total += 1;
        Ok(())
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn n_bins(&self) -> usize {
        self.bins.len()
    }

    pub fn bins(&self) -> impl Iterator<Item = (&[u16], u64)> {
        self.bins.iter().map(|(k, v)| (k.as_slice(), *v))
    }

    pub fn count(&self, key: &[u16]) -> u64 {
        self.bins.get(key).copied().unwrap_or(0)
    }

    /// Relative frequency of one bin.
    pub fn frequency(&self, key: &[u16]) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.count(key) as f64 / self.total as f64
        }
    }
}

/// Total variation distance between two histograms on the same grid: half
/// the L1 distance between their relative frequencies over the bin union.
pub fn tvd(a: &PathHistogram, b: &PathHistogram) -> Result<f64, TestError> {
    if a.grid != b.grid {
        return Err(TestError::GridMismatch);
    }
    if a.total == 0 || b.total == 0 {
        return Err(TestError::EmptySample);
    }
    let mut sum = 0.0;
    let mut iter_b = b.bins.iter().peekable();
    for (key, count_a) in &a.bins {
        while let Some((key_b, count_b)) = iter_b.peek() {
            if *key_b < key {
                sum += **count_b as f64 / b.total as f64;
                iter_b.next();
            } else {
                break;
            }
        }
        let fb = match iter_b.peek() {
            Some((key_b, count_b)) if *key_b == key => {
                let f = **count_b as f64 / b.total as f64;
                iter_b.next();
                f
            }
            _ => 0.0,
        };
        sum += (*count_a as f64 / a.total as f64 - fb).abs();
    }
    for (_, count_b) in iter_b {
        sum += *count_b as f64 / b.total as f64;
    }
    Ok(sum / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hist_from(paths: &[Vec<f64>], grid: GridSpec) -> PathHistogram {
        let mut h = PathHistogram::new(grid);
        for p in paths {
            h.add_path(p).unwrap();
        }
        h
    }

    #[test]
    fn binary_bookkeeping() {
        let paths = vec![vec![1.0, 1.0], vec![1.0, 0.0], vec![0.0, 1.0], vec![0.0, 0.0]];
        let h = hist_from(&paths, GridSpec::Binary { len: 2 });
        assert_eq!(h.total(), 4);
        assert_eq!(h.n_bins(), 4);
        for (_, count) in h.bins() {
            assert_eq!(count, 1);
        }
    }

    #[test]
    fn tvd_identity_and_disjoint() {
        let grid = GridSpec::Binary { len: 1 };
        let a = hist_from(&[vec![1.0], vec![0.0]], grid.clone());
        assert_eq!(tvd(&a, &a).unwrap(), 0.0);
        let b = hist_from(&[vec![1.0]], grid.clone());
        let c = hist_from(&[vec![0.0]], grid);
        assert_eq!(tvd(&b, &c).unwrap(), 1.0);
    }

    #[test]
    fn tvd_hand_computed() {
        let grid = GridSpec::Binary { len: 1 };
        let mut a = PathHistogram::new(grid.clone());
        let mut b = PathHistogram::new(grid);
        for _ in 0..5 {
            a.add_path(&[0.0]).unwrap();
            a.add_path(&[1.0]).unwrap();
        }
        for _ in 0..6 {
            b.add_path(&[0.0]).unwrap();
        }
        for _ in 0..4 {
            b.add_path(&[1.0]).unwrap();
        }
        assert!((tvd(&a, &b).unwrap() - 0.1).abs() < 1e-12);
    }

    #[test]
    fn grid_mismatch_rejected() {
        let a = hist_from(&[vec![1.0]], GridSpec::Binary { len: 1 });
        let b = hist_from(&[vec![1.0]], GridSpec::IntegerCapped { len: 1, cap: 8 });
        assert!(matches!(tvd(&a, &b), Err(TestError::GridMismatch)));
    }

    #[test]
    fn integer_cap_pools_tail() {
        let grid = GridSpec::IntegerCapped { len: 1, cap: 3 };
        let h = hist_from(&[vec![0.0], vec![3.0], vec![7.0], vec![11.0]], grid);
        assert_eq!(h.count(&[3]), 3);
        assert_eq!(h.count(&[0]), 1);
    }

    #[test]
    fn binary_grid_rejects_other_values() {
        let mut h = PathHistogram::new(GridSpec::Binary { len: 1 });
        assert!(h.add_path(&[0.5]).is_err());
        let mut h = PathHistogram::new(GridSpec::IntegerCapped { len: 1, cap: 8 });
        assert!(h.add_path(&[-1.0]).is_err());
        assert!(h.add_path(&[0.25]).is_err());
    }

    #[test]
    fn equal_probability_buckets_roughly_balanced() {
        let pilot: Vec<Vec<f64>> = (0..12_000).map(|i| vec![(i as f64) / 12_000.0]).collect();
        let grid = GridSpec::equal_probability(&pilot, 12).unwrap();
        let h = hist_from(&pilot, grid);
        for (_, count) in h.bins() {
            assert!((count as i64 - 1000).abs() <= 1, "count = {count}");
        }
    }

    proptest! {
        /// TVD is a metric on histograms over a fixed grid.
        #[test]
        fn tvd_metric_properties(
            counts_a in proptest::collection::vec(0u64..50, 4),
            counts_b in proptest::collection::vec(0u64..50, 4),
            counts_c in proptest::collection::vec(0u64..50, 4),
        ) {
            prop_assume!(counts_a.iter().sum::<u64>() > 0);
            prop_assume!(counts_b.iter().sum::<u64>() > 0);
            prop_assume!(counts_c.iter().sum::<u64>() > 0);
            let grid = GridSpec::IntegerCapped { len: 1, cap: 3 };
            let build = |counts: &[u64]| {
                let mut h = PathHistogram::new(grid.clone());
                for (v, c) in counts.iter().enumerate() {
                    for _ in 0..*c {
                        h.add_path(&[v as f64]).unwrap();
                    }
                }
                h
            };
            let (a, b, c) = (build(&counts_a), build(&counts_b), build(&counts_c));
            let d_ab = tvd(&a, &b).unwrap();
            let d_ba = tvd(&b, &a).unwrap();
            let d_ac = tvd(&a, &c).unwrap();
            let d_cb = tvd(&c, &b).unwrap();
            prop_assert!((d_ab - d_ba).abs() < 1e-12);
            prop_assert!((0.0..=1.0).contains(&d_ab));
            prop_assert!(d_ab <= d_ac + d_cb + 1e-12);
            // identity of indiscernibles at the bin level
            let scaled: Vec<u64> = counts_a.iter().map(|c| c * 3).collect();
            let d_self = tvd(&a, &build(&scaled)).unwrap();
            prop_assert!(d_self.abs() < 1e-12);
        }
    }
}
