//! State distance measures: fidelity, trace norm, their two-sided relation,
//! and the swap-test antisymmetric probability.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::metrics::linalg::{check_psd, hermitian_eigen, psd_sqrt};
use crate::sim::DensityMatrix;
use crate::{Error, Result};

/// Fidelity tr√(√X Y √X) between positive semidefinite operators.
///
/// This is the closed form of the maximum purification overlap, so for unit
/// trace arguments it lies in [0, 1] and F(ρ, |ψ⟩⟨ψ|) = √⟨ψ|ρ|ψ⟩.
pub fn fidelity(x: &DMatrix<Complex64>, y: &DMatrix<Complex64>) -> Result<f64> {
    if x.nrows() != y.nrows() || x.nrows() != x.ncols() || y.nrows() != y.ncols() {
        return Err(Error::DimensionMismatch {
            context: "fidelity",
            expected: x.nrows(),
            found: y.nrows(),
        });
    }
    check_psd(x)?;
    check_psd(y)?;
    let sx = psd_sqrt(x);
    let m = &sx * y * &sx;
    let (vals, _) = hermitian_eigen(&m);
    Ok(vals.iter().map(|&v| v.max(0.0).sqrt()).sum())
}

pub fn fidelity_states(rho: &DensityMatrix, xi: &DensityMatrix) -> Result<f64> {
    fidelity(rho.matrix(), xi.matrix())
}

/// Trace norm: the sum of the singular values.
pub fn trace_norm(m: &DMatrix<Complex64>) -> f64 {
    m.clone().svd(false, false).singular_values.iter().sum()
}

/// Slack of the two-sided fidelity / trace-norm relation
///
/// 1 − F(ρ,ξ) ≤ ½‖ρ−ξ‖_tr ≤ √(1 − F(ρ,ξ)²)
///
/// returned as (lower_slack, upper_slack); both are nonnegative for states,
/// up to numerical error.
pub fn fvdg_gap(rho: &DMatrix<Complex64>, xi: &DMatrix<Complex64>) -> Result<(f64, f64)> {
    if rho.nrows() != xi.nrows() {
        return Err(Error::DimensionMismatch {
            context: "fvdg_gap",
            expected: rho.nrows(),
            found: xi.nrows(),
        });
    }
    let f = fidelity(rho, xi)?;
    let half_dist = 0.5 * trace_norm(&(rho - xi));
    let lower_slack = half_dist - (1.0 - f);
    let upper_slack = (1.0 - f * f).max(0.0).sqrt() - half_dist;
    Ok((lower_slack, upper_slack))
}

/// tr(½(I − W) ρ) for ρ on A ⊗ B with equally sized halves: the probability
/// that a swap test on (A, B) returns the antisymmetric outcome.
pub fn swap_antisym_prob(rho: &DensityMatrix) -> Result<f64> {
    if rho.width() % 2 != 0 {
        return Err(Error::DimensionMismatch {
            context: "swap_antisym_prob halves",
            expected: rho.width() + 1,
            found: rho.width(),
        });
    }
    let half = rho.width() / 2;
    let mask = (1usize << half) - 1;
    // tr(Wρ) = Σ_i ρ[swap(i), i] with swap exchanging the two halves
    let mut tr_w = Complex64::ZERO;
    for i in 0..rho.dim() {
        let swapped = ((i & mask) << half) | (i >> half);
        tr_w += rho.matrix()[(swapped, i)];
    }
    Ok(0.5 * (1.0 - tr_w.re))
}
