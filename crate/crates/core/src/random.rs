//! Seeded sampling of small integer data shared by tests and certificates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{int, Rational};

pub const DEFAULT_SEED: u64 = 20_240_601;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer-valued rationals drawn uniformly from `-bound..=bound`.
pub fn small_vector(rng: &mut impl Rng, len: usize, bound: i64) -> Vec<Rational> {
    (0..len).map(|_| int(rng.gen_range(-bound..=bound))).collect()
}
