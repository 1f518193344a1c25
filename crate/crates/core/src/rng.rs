//! Deterministic, splittable random streams.
//!
//! Every stochastic operation in this crate takes an explicit [`RngStream`].
//! A stream is fully identified by its `(seed, path)` pair: equal pairs
//! produce bitwise-equal draw sequences, and streams with different paths
//! from the same seed behave as statistically independent sources. Parallel
//! replication is done by handing each task its own child stream from
//! [`RngStream::split`] and merging results in a fixed order.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 finalizer; a bijection on u64.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Hash `(seed, path)` into a 256-bit ChaCha key.
fn derive_key(seed: u64, path: &[u32]) -> [u8; 32] {
    let mut state = mix(seed ^ GOLDEN);
    for &index in path {
        state = mix(state.wrapping_add(GOLDEN) ^ mix(u64::from(index) ^ 0xd134_2543_de82_ef95));
    }
    let mut key = [0u8; 32];
    let mut counter = state;
    for chunk in key.chunks_exact_mut(8) {
        counter = counter.wrapping_add(GOLDEN);
        chunk.copy_from_slice(&mix(counter).to_le_bytes());
    }
    key
}

/// Deterministic random stream identified by a seed and a split lineage.
#[derive(Clone, Debug)]
pub struct RngStream {
    seed: u64,
    path: Vec<u32>,
    inner: ChaCha8Rng,
}

impl RngStream {
    /// Root stream for `seed`, with an empty path.
    pub fn new(seed: u64) -> Self {
        Self::from_parts(seed, Vec::new())
    }

    fn from_parts(seed: u64, path: Vec<u32>) -> Self {
        let inner = ChaCha8Rng::from_seed(derive_key(seed, &path));
        Self { seed, path, inner }
    }

    /// Child stream with the path extended by `index`.
    ///
    /// Splitting is a pure function of `(seed, path, index)`: it does not
    /// advance the parent, and repeated calls with the same index return
    /// identical streams regardless of how far the parent has been consumed.
    pub fn split(&self, index: u32) -> Self {
        let mut path = Vec::with_capacity(self.path.len() + 1);
        path.extend_from_slice(&self.path);
        path.push(index);
        Self::from_parts(self.seed, path)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn path(&self) -> &[u32] {
        &self.path
    }

    /// Uniform draw in `[0, 1)` with 53-bit resolution.
    pub fn next_f64(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw in `(0, 1]`; safe as an argument to `ln`.
    pub fn next_f64_open(&mut self) -> f64 {
        1.0 - self.next_f64()
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.inner.try_fill_bytes(dest)
    }
}
