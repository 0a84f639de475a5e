//! Deterministic synthetic images for tests, simulation and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::matrix::RealMatrix;

/// Uniform samples in `[0, 255)` from a seeded ChaCha8 stream; identical across platforms.
pub fn random_image(n: usize, m: usize, seed: u64) -> Result<RealMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_image_from(n, m, &mut rng)
}

pub fn random_image_from(n: usize, m: usize, rng: &mut impl Rng) -> Result<RealMatrix> {
    let data = (0..n * m).map(|_| rng.gen_range(0.0..255.0)).collect();
    RealMatrix::from_vec(n, m, data)
}

/// `I(i,j) = i + j`: smooth but strongly non-periodic.
pub fn ramp_image(n: usize, m: usize) -> Result<RealMatrix> {
    RealMatrix::from_fn(n, m, |i, j| (i + j) as f64)
}
