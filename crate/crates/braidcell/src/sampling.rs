//! Deterministic word sampling for the fuzz harness and the test suites.
//!
//! A fixed in-crate generator keeps seeded word lists bit-identical across
//! platforms and dependency upgrades, which the golden acceptance runs rely
//! on.

/// SplitMix64 generator (Steele, Lea, Flood 2014).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n` (n > 0).
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// A random positive word of length in `1..=max_len`.
pub fn random_positive_word(rng: &mut SplitMix64, rank: usize, max_len: usize) -> Vec<u8> {
    let len = 1 + rng.below(max_len);
    (0..len).map(|_| rng.below(rank) as u8).collect()
}

/// A random signed word of length in `0..=max_len`.
pub fn random_signed_word(rng: &mut SplitMix64, rank: usize, max_len: usize) -> Vec<(u8, bool)> {
    let len = rng.below(max_len + 1);
    (0..len)
        .map(|_| (rng.below(rank) as u8, rng.below(2) == 0))
        .collect()
}
