//! Seeded deterministic random numbers for witness searches.
//!
//! Splitmix64 keeps the randomized searches (module isomorphism, summand
//! splitting, Cantor-Zassenhaus) reproducible across platforms without
//! pulling in an external RNG. The searches only depend on determinism,
//! not on distribution quality.

#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `0..n` (n must be nonzero).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Derive an independent stream, for splitting work deterministically.
    pub fn fork(&mut self) -> Rng {
        Rng::new(self.next_u64())
    }
}

/// Search effort knobs shared by the randomized witness searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchOpts {
    pub seed: u64,
    /// Random invertible-combination attempts before the exact fallback.
    pub iso_attempts: usize,
}

impl Default for SearchOpts {
    fn default() -> Self {
        SearchOpts { seed: 0, iso_attempts: 64 }
    }
}

impl SearchOpts {
    pub fn with_seed(seed: u64) -> Self {
        SearchOpts { seed, ..Default::default() }
    }

    pub fn rng(&self) -> Rng {
        Rng::new(self.seed)
    }
}
