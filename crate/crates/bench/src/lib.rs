//! Shared input builders for the pipeline benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pdet_core::{Matrix, Scalar};

/// Seeded dense integer matrix with entries in [-bound, bound].
pub fn seeded_matrix(seed: u64, rows: usize, cols: usize, bound: i64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..rows * cols)
        .map(|_| Scalar::from_int(rng.gen_range(-bound..=bound)))
        .collect();
    Matrix::new(rows, cols, data)
}
