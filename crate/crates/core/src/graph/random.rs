//! Seeded randomness.
//!
//! Every random stream is a ChaCha8 generator (`rand_chacha`), whose output
//! is specified and platform independent. The 256-bit key is four outputs of
//! SplitMix64 started from `master` with `stream` mixed in, so a `Seed` pins
//! down a sample bit for bit.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Seed {
    pub master: u64,
    pub stream: u64,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl Seed {
    pub const fn new(master: u64, stream: u64) -> Self {
        Seed { master, stream }
    }

    /// A child seed whose stream is a hash of this seed and `index`.
    pub fn derive(self, index: u64) -> Seed {
        let mut state = self.stream ^ index.rotate_left(32);
        let mixed = splitmix64(&mut state) ^ index;
        Seed::new(self.master, mixed)
    }

    /// A single 64-bit digest of `(master, stream)`, used in reports.
    pub fn digest(self) -> u64 {
        let mut state = self.master;
        let a = splitmix64(&mut state);
        let mut state = a ^ self.stream;
        splitmix64(&mut state)
    }

    pub fn rng(self) -> ChaCha8Rng {
        let mut state = self.master;
        let mut state2 = splitmix64(&mut state) ^ self.stream;
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state2).to_le_bytes());
        }
        ChaCha8Rng::from_seed(key)
    }
}

/// Samples `G(n, p)`: each pair `{u, v}`, visited in lexicographic order, is
/// kept when a uniform `[0, 1)` draw is below `p`.
pub fn sample_gnp(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = seed.rng();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}
