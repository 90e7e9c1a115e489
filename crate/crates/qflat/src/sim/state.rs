//! Pure and mixed state containers.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{Error, Result};

/// State vector over `width` qubits. Qubit `i` is bit `i` of the basis index.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    width: usize,
    amps: Vec<Complex64>,
}

impl PureState {
    pub fn new(width: usize, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != 1usize << width {
            return Err(Error::DimensionMismatch {
                context: "pure state",
                expected: 1usize << width,
                found: amps.len(),
            });
        }
        Ok(PureState { width, amps })
    }

    /// |0…0⟩.
    pub fn zero(width: usize) -> Self {
        let mut amps = vec![Complex64::ZERO; 1 << width];
        amps[0] = Complex64::ONE;
        PureState { width, amps }
    }

    pub fn basis(width: usize, index: usize) -> Self {
        let mut amps = vec![Complex64::ZERO; 1 << width];
        amps[index] = Complex64::ONE;
        PureState { width, amps }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            for a in &mut self.amps {
                *a /= n;
            }
        }
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// |self⟩ ⊗ |other⟩, with `other` on the high wires.
    pub fn tensor(&self, other: &PureState) -> PureState {
        let width = self.width + other.width;
        let mut amps = vec![Complex64::ZERO; 1 << width];
        for (j, b) in other.amps.iter().enumerate() {
            if b.norm_sqr() == 0.0 {
                continue;
            }
            let base = j << self.width;
            for (i, a) in self.amps.iter().enumerate() {
                amps[base | i] = a * b;
            }
        }
        PureState { width, amps }
    }

    /// Unit norm within `tol`.
    pub fn validate(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    pub fn projector(&self) -> DensityMatrix {
        let dim = self.dim();
        let mut mat = DMatrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                mat[(i, j)] = self.amps[i] * self.amps[j].conj();
            }
        }
        DensityMatrix {
            width: self.width,
            mat,
        }
    }
}

/// Dense density matrix over `width` qubits, row index = bra, column = ket.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    width: usize,
    mat: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub fn new(width: usize, mat: DMatrix<Complex64>) -> Result<Self> {
        let dim = 1usize << width;
        if mat.nrows() != dim || mat.ncols() != dim {
            return Err(Error::DimensionMismatch {
                context: "density matrix",
                expected: dim,
                found: mat.nrows(),
            });
        }
        Ok(DensityMatrix { width, mat })
    }

    /// |0…0⟩⟨0…0|.
    pub fn zero(width: usize) -> Self {
        PureState::zero(width).projector()
    }

    pub fn maximally_mixed(width: usize) -> Self {
        let dim = 1usize << width;
        let mat = DMatrix::identity(dim, dim) * Complex64::new(1.0 / dim as f64, 0.0);
        DensityMatrix { width, mat }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn matrix_mut(&mut self) -> &mut DMatrix<Complex64> {
        &mut self.mat
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.mat
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.diagonal().sum()
    }

    /// Hermitian, positive semidefinite, and unit trace, all within `tol`.
    pub fn validate(&self, tol: f64) -> bool {
        if (self.trace().re - 1.0).abs() > tol || self.trace().im.abs() > tol {
            return false;
        }
        let herm = (&self.mat - self.mat.adjoint()).norm();
        if herm > tol {
            return false;
        }
        let eig = self.mat.clone().symmetric_eigen();
        eig.eigenvalues.iter().all(|&v| v >= -tol)
    }

    pub fn convex_mix(p: f64, a: &DensityMatrix, b: &DensityMatrix) -> Result<DensityMatrix> {
        if a.width != b.width {
            return Err(Error::DimensionMismatch {
                context: "convex mix",
                expected: a.dim(),
                found: b.dim(),
            });
        }
        let mat = &a.mat * Complex64::new(p, 0.0) + &b.mat * Complex64::new(1.0 - p, 0.0);
        Ok(DensityMatrix {
            width: a.width,
            mat,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_state_is_normalized() {
        let psi = PureState::zero(3);
        assert!(psi.validate(1e-12));
        assert_eq!(psi.dim(), 8);
    }

    #[test]
    fn projector_of_basis_state() {
        let rho = PureState::basis(1, 1).projector();
        assert_eq!(rho.matrix()[(1, 1)], Complex64::ONE);
        assert_eq!(rho.matrix()[(0, 0)], Complex64::ZERO);
        assert!(rho.validate(1e-12));
    }

    #[test]
    fn tensor_orders_factors_low_to_high() {
        // |1⟩ ⊗ |0⟩ with the second factor on the high wire: index 0b01
        let t = PureState::basis(1, 1).tensor(&PureState::zero(1));
        assert_eq!(t.amplitudes()[0b01], Complex64::ONE);
    }

    #[test]
    fn maximally_mixed_is_valid() {
        assert!(DensityMatrix::maximally_mixed(2).validate(1e-12));
    }
}
