//! Independent ground truth: explicit matrices, exact minors and an exact
//! LP test for torus semistability.

pub mod flagpoint;
pub mod grass;
pub mod lp;
pub mod suites;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Sampler = ChaCha8Rng;

pub fn sampler(seed: u64) -> Sampler {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero integer in [-50, 50].
pub fn nonzero(rng: &mut Sampler) -> i64 {
    loop {
        let v: i64 = rng.gen_range(-50..=50);
        if v != 0 {
            return v;
        }
    }
}
