//! Partial trace.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::ir::QubitRef;
use crate::sim::apply::{complement, scatter_bits};
use crate::sim::{DensityMatrix, PureState};
use crate::{Error, Result};

/// Trace out everything except `keep`. Qubit `p` of the result is wire
/// `keep[p]` of the input, so the keep order doubles as a permutation.
pub fn partial_trace(rho: &DensityMatrix, keep: &[QubitRef]) -> Result<DensityMatrix> {
    if keep.is_empty() {
        return Err(Error::EmptyKeep);
    }
    for q in keep {
        if q.0 >= rho.width() {
            return Err(Error::DimensionMismatch {
                context: "partial trace keep set",
                expected: rho.width(),
                found: q.0,
            });
        }
    }
    let traced = complement(rho.width(), keep);
    let kdim = 1usize << keep.len();
    let tdim = 1usize << traced.len();
    let mut out = DMatrix::zeros(kdim, kdim);
    for a in 0..kdim {
        let fa = scatter_bits(a, keep);
        for b in 0..kdim {
            let fb = scatter_bits(b, keep);
            let mut acc = Complex64::ZERO;
            for t in 0..tdim {
                let ft = scatter_bits(t, &traced);
                acc += rho.matrix()[(fa | ft, fb | ft)];
            }
            out[(a, b)] = acc;
        }
    }
    DensityMatrix::new(keep.len(), out)
}

/// Reduced density matrix of a pure state on `keep`, without materializing
/// the full projector.
pub fn reduce_pure(psi: &PureState, keep: &[QubitRef]) -> Result<DensityMatrix> {
    if keep.is_empty() {
        return Err(Error::EmptyKeep);
    }
    let traced = complement(psi.width(), keep);
    let kdim = 1usize << keep.len();
    let tdim = 1usize << traced.len();
    let mut out = DMatrix::zeros(kdim, kdim);
    let amps = psi.amplitudes();
    for t in 0..tdim {
        let ft = scatter_bits(t, &traced);
        for a in 0..kdim {
            let va = amps[scatter_bits(a, keep) | ft];
            if va == Complex64::ZERO {
                continue;
            }
            for b in 0..kdim {
                let vb = amps[scatter_bits(b, keep) | ft];
                out[(a, b)] += va * vb.conj();
            }
        }
    }
    DensityMatrix::new(keep.len(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::random_density;

    #[test]
    fn trace_nothing_out_is_identity_permutation() {
        let rho = random_density(2, 3);
        let kept = partial_trace(&rho, &[QubitRef(0), QubitRef(1)]).unwrap();
        assert!((kept.matrix() - rho.matrix()).norm() < 1e-15);
    }

    #[test]
    fn bell_state_reduces_to_maximally_mixed() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut amps = vec![Complex64::ZERO; 4];
        amps[0b00] = Complex64::new(s, 0.0);
        amps[0b11] = Complex64::new(s, 0.0);
        let bell = PureState::new(2, amps).unwrap();
        let rho = partial_trace(&bell.projector(), &[QubitRef(0)]).unwrap();
        assert!((rho.matrix() - DensityMatrix::maximally_mixed(1).matrix()).norm() < 1e-12);
    }

    #[test]
    fn random_reductions_stay_states() {
        for seed in 0..20 {
            let rho = random_density(3, seed);
            let red = partial_trace(&rho, &[QubitRef(2), QubitRef(0)]).unwrap();
            assert!((red.trace().re - 1.0).abs() < 1e-12);
            assert!(red.validate(1e-10));
        }
    }

    #[test]
    fn empty_keep_set_is_an_error() {
        let rho = random_density(2, 1);
        assert!(matches!(partial_trace(&rho, &[]), Err(Error::EmptyKeep)));
    }

    #[test]
    fn reduce_pure_matches_projector_trace() {
        use crate::sim::random_pure;
        let psi = random_pure(3, 11);
        let keep = [QubitRef(1), QubitRef(2)];
        let a = reduce_pure(&psi, &keep).unwrap();
        let b = partial_trace(&psi.projector(), &keep).unwrap();
        assert!((a.matrix() - b.matrix()).norm() < 1e-13);
    }
}
