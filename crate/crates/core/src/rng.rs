//! Seeded, portable randomness.
//!
//! All randomness goes through ChaCha8 keyed by a 64-bit seed. Independent
//! streams (bench trials, for instance) select a different ChaCha stream
//! number, so results never depend on thread scheduling.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

#[derive(Debug, Clone)]
pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self::for_stream(seed, 0)
    }

    /// Stream `stream` of the generator keyed by `seed`.
    pub fn for_stream(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self { inner }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform integer in `0..bound` by rejection sampling.
    ///
    /// Draws below `2^64 mod bound` are rejected so the accepted range is an
    /// exact multiple of `bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let reject_below = bound.wrapping_neg() % bound;
        loop {
            let r = self.inner.next_u64();
            if r >= reject_below {
                return r % bound;
            }
        }
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.below(len as u64) as usize
    }

    /// Uniform float in `[0, 1)` with 53 random bits.
    pub fn unit_f64(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}
