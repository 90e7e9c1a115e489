//! Hermitian matrix helpers shared by the metric computations.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{Error, Result};

/// Eigenvalues below this are treated as exact zeros when inverting or
/// taking square roots; the fidelity formula is delicate near rank
/// deficiency.
pub const EIGENVALUE_CLAMP: f64 = 1e-12;

/// Tolerance on how negative an eigenvalue may be before an operator is
/// rejected as not positive semidefinite.
pub const PSD_TOL: f64 = 1e-8;

pub fn hermitize(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    (m + m.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Eigendecomposition of a Hermitian matrix: (eigenvalues, eigenvectors).
pub fn hermitian_eigen(m: &DMatrix<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let eig = hermitize(m).symmetric_eigen();
    (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
}

pub fn min_eigenvalue(m: &DMatrix<Complex64>) -> f64 {
    hermitian_eigen(m).0.into_iter().fold(f64::INFINITY, f64::min)
}

pub fn check_psd(m: &DMatrix<Complex64>) -> Result<()> {
    let min = min_eigenvalue(m);
    if min < -PSD_TOL {
        Err(Error::NotPositive { min_eigenvalue: min })
    } else {
        Ok(())
    }
}

/// Apply `f` to the clamped eigenvalues of a Hermitian matrix.
pub fn hermitian_map(m: &DMatrix<Complex64>, f: impl Fn(f64) -> f64) -> DMatrix<Complex64> {
    let (vals, vecs) = hermitian_eigen(m);
    let mapped = DMatrix::from_diagonal(
        &nalgebra::DVector::from_iterator(
            vals.len(),
            vals.iter().map(|&v| {
                let clamped = if v < EIGENVALUE_CLAMP { 0.0 } else { v };
                Complex64::new(f(clamped), 0.0)
            }),
        ),
    );
    &vecs * mapped * vecs.adjoint()
}

/// Square root of a PSD matrix with eigenvalue clamping.
pub fn psd_sqrt(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    hermitian_map(m, f64::sqrt)
}

/// Pseudo-inverse square root of a PSD matrix (zero on the clamped kernel).
pub fn psd_inv_sqrt(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    hermitian_map(m, |v| if v > 0.0 { 1.0 / v.sqrt() } else { 0.0 })
}

/// Project a Hermitian matrix onto the density manifold: eigenvalues onto
/// the probability simplex, eigenvectors unchanged.
pub fn project_density(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (vals, vecs) = hermitian_eigen(m);
    let projected = project_simplex(&vals);
    let d = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        projected.len(),
        projected.iter().map(|&v| Complex64::new(v, 0.0)),
    ));
    &vecs * d * vecs.adjoint()
}

/// Euclidean projection onto {p : p ≥ 0, Σp = 1}.
pub fn project_simplex(v: &[f64]) -> Vec<f64> {
    let mut sorted: Vec<f64> = v.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumsum = 0.0;
    let mut tau = 0.0;
    for (k, &val) in sorted.iter().enumerate() {
        cumsum += val;
        let candidate = (cumsum - 1.0) / (k + 1) as f64;
        if val - candidate > 0.0 {
            tau = candidate;
        }
    }
    v.iter().map(|&x| (x - tau).max(0.0)).collect()
}
