//! Seeded random states.
//!
//! Everything runs on ChaCha8, a named portable generator, so any state here
//! is a pure function of its seed.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::sim::{DensityMatrix, PureState};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derive an independent stream for trial `index` of a seeded run.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 step over the pair
    let mut z = seed ^ index.wrapping_mul(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn complex_normal(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Haar-distributed pure state.
pub fn random_pure(width: usize, seed: u64) -> PureState {
    let mut rng = rng_from_seed(seed);
    random_pure_with(width, &mut rng)
}

pub fn random_pure_with(width: usize, rng: &mut ChaCha8Rng) -> PureState {
    let amps: Vec<Complex64> = (0..1usize << width).map(|_| complex_normal(rng)).collect();
    let mut psi = PureState::new(width, amps).expect("length is 2^width");
    psi.normalize();
    psi
}

/// Density matrix from a normalized Wishart construction GG*/tr(GG*).
pub fn random_density(width: usize, seed: u64) -> DensityMatrix {
    let mut rng = rng_from_seed(seed);
    random_density_with(width, &mut rng)
}

pub fn random_density_with(width: usize, rng: &mut ChaCha8Rng) -> DensityMatrix {
    let mat = random_density_dim_with(1usize << width, rng);
    DensityMatrix::new(width, mat).expect("dimension is 2^width")
}

/// Wishart density of arbitrary dimension (not necessarily a power of two);
/// the raw matrix form used by the metrics suites.
pub fn random_density_dim(dim: usize, seed: u64) -> DMatrix<Complex64> {
    let mut rng = rng_from_seed(seed);
    random_density_dim_with(dim, &mut rng)
}

pub fn random_density_dim_with(dim: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(dim, dim, |_, _| complex_normal(rng));
    let w = &g * g.adjoint();
    let tr: Complex64 = w.diagonal().sum();
    w / tr
}
