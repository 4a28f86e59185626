//! Small deterministic RNG for seeded sampling.
//!
//! SplitMix64 is enough for falsification-style random checks; it is not
//! cryptographic and makes no uniformity promise beyond "well mixed".
//! Keeping it local pins the exact stream across platforms and releases,
//! which golden tests rely on.

/// SplitMix64 generator (public-domain constants).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound`. `bound` must be positive.
    pub fn next_below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        // Modulo bias is irrelevant at the bounds used here (tiny vs 2^64).
        (self.next_u64() % bound as u64) as usize
    }
}
