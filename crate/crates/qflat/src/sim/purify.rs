//! Purification.

use num_complex::Complex64;

use crate::ir::QubitRef;
use crate::sim::{DensityMatrix, PureState};
use crate::{Error, Result};

/// A purification of ρ on doubled width: the original wires stay low, the
/// purifier occupies the high wires. Eigenvalues are taken in descending
/// order with phase-normalized eigenvectors, so the output is deterministic
/// and a pure input |ψ⟩⟨ψ| purifies to |ψ⟩ ⊗ |0…0⟩.
pub fn purify(rho: &DensityMatrix) -> Result<PureState> {
    let dim = rho.dim();
    let eig = rho.matrix().clone().symmetric_eigen();
    let min = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    if min < -1e-8 {
        return Err(Error::NotPositive { min_eigenvalue: min });
    }
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));

    let mut amps = vec![Complex64::ZERO; dim * dim];
    for (slot, &col) in order.iter().enumerate() {
        let lambda = eig.eigenvalues[col].max(0.0);
        if lambda == 0.0 {
            continue;
        }
        let v = eig.eigenvectors.column(col);
        // fix the global phase: first significant component real positive
        let phase = v
            .iter()
            .find(|c| c.norm() > 1e-8)
            .map(|c| c / c.norm())
            .unwrap_or(Complex64::ONE);
        let scale = lambda.sqrt() * phase.conj();
        for (x, c) in v.iter().enumerate() {
            amps[(slot << rho.width()) | x] = c * scale;
        }
    }
    PureState::new(2 * rho.width(), amps)
}

/// The wires of the original system inside a purification.
pub fn purified_system_wires(width: usize) -> Vec<QubitRef> {
    (0..width).map(QubitRef).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{partial_trace, random_density};

    #[test]
    fn pure_zero_purifies_to_zero_zero() {
        let rho = DensityMatrix::zero(1);
        let out = purify(&rho).unwrap();
        assert!((out.amplitudes()[0] - Complex64::ONE).norm() < 1e-12);
    }

    #[test]
    fn maximally_mixed_purifies_to_bell_type_state() {
        let rho = DensityMatrix::maximally_mixed(1);
        let out = purify(&rho).unwrap();
        let back = partial_trace(&out.projector(), &purified_system_wires(1)).unwrap();
        assert!((back.matrix() - rho.matrix()).norm() < 1e-10);
    }

    #[test]
    fn purification_roundtrips_for_random_states() {
        for seed in 0..20 {
            let rho = random_density(2, seed);
            let out = purify(&rho).unwrap();
            assert!(out.validate(1e-10));
            let back = partial_trace(&out.projector(), &purified_system_wires(2)).unwrap();
            assert!(
                (back.matrix() - rho.matrix()).norm() < 1e-10,
                "roundtrip failed at seed {seed}"
            );
        }
    }
}
