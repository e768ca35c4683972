//! Counter-based uniform streams.
//!
//! A [`RandomStream`] is addressed by `(master_seed, stream_id)`. The `c`-th
//! draw is a pure function of the pair and the counter `c`: the pair is hashed
//! into a 64-bit key and draw `c` is the SplitMix64 output at position `c` of
//! the sequence seeded by that key. Replicate `r` of a Monte Carlo loop uses
//! `stream_id = r`, so results never depend on scheduling or thread count.
//!
//! Draws can be consumed sequentially ([`RandomStream::uniform`]) or read at a
//! fixed counter ([`RandomStream::uniform_at`]). Samplers use the latter for
//! per-pair coins so that a pair's coin does not depend on how many other
//! pairs were looked at first.

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomStream {
    master_seed: u64,
    stream_id: u64,
    key: u64,
    counter: u64,
}

impl RandomStream {
    pub fn new(master_seed: u64, stream_id: u64) -> Self {
        let key = mix64(mix64(master_seed ^ 0x5851_F42D_4C95_7F2D).wrapping_add(mix64(stream_id.wrapping_mul(GAMMA) ^ 0x1405_7B7E_F767_814F)));
        Self {
            master_seed,
            stream_id,
            key,
            counter: 0,
        }
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// Number of sequential draws consumed so far.
    pub fn counter(&self) -> u64 {
        self.counter
    }

    /// A child stream whose draws are independent of the parent's.
    /// Deterministic in `(parent, label)` and does not advance the parent.
    pub fn substream(&self, label: u64) -> RandomStream {
        let id = mix64(self.key ^ mix64(label.wrapping_add(0xD1B5_4A32_D192_ED03)));
        RandomStream::new(self.master_seed, id)
    }

    #[inline]
    pub fn u64_at(&self, counter: u64) -> u64 {
        mix64(self.key.wrapping_add(counter.wrapping_add(1).wrapping_mul(GAMMA)))
    }

    /// Uniform in [0, 1) with 53 bits of resolution.
    #[inline]
    pub fn uniform_at(&self, counter: u64) -> f64 {
        (self.u64_at(counter) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let v = self.u64_at(self.counter);
        self.counter += 1;
        v
    }

    #[inline]
    pub fn uniform(&mut self) -> f64 {
        let v = self.uniform_at(self.counter);
        self.counter += 1;
        v
    }

    /// Index in `0..m` by inverse transform of one uniform. `m` must be positive.
    #[inline]
    pub fn index(&mut self, m: usize) -> usize {
        let u = self.uniform();
        ((u * m as f64) as usize).min(m - 1)
    }
}

/// Derive a fresh master seed for a sub-experiment (for example the second
/// operand of a two-sample comparison).
pub fn derive_seed(seed: u64, label: u64) -> u64 {
    mix64(seed ^ mix64(label ^ 0xA076_1D64_78BD_642F))
}
