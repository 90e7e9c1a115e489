//! Computational-basis measurement of designated wires.
//!
//! Pure states branch explicitly; density matrices go through the
//! two-projector channel.

use num_complex::Complex64;

use crate::ir::QubitRef;
use crate::sim::{DensityMatrix, PureState};
use crate::{Error, Result};

/// Branches below this probability are dropped.
pub const BRANCH_CUTOFF: f64 = 1e-14;

#[derive(Clone, Debug)]
pub struct MeasurementBranch {
    pub probability: f64,
    pub outcome: u8,
    pub post_state: PureState,
}

/// Born-rule branches for measuring one wire of a pure state.
pub fn measure_qubit(psi: &PureState, qubit: QubitRef) -> Result<Vec<MeasurementBranch>> {
    if qubit.0 >= psi.width() {
        return Err(Error::DimensionMismatch {
            context: "measured qubit",
            expected: psi.width(),
            found: qubit.0,
        });
    }
    let bit = 1usize << qubit.0;
    let mut branches = Vec::with_capacity(2);
    for outcome in 0..2u8 {
        let mut amps = vec![Complex64::ZERO; psi.dim()];
        let mut prob = 0.0;
        for (idx, &a) in psi.amplitudes().iter().enumerate() {
            if ((idx & bit != 0) as u8) == outcome {
                prob += a.norm_sqr();
                amps[idx] = a;
            }
        }
        if prob <= BRANCH_CUTOFF {
            continue;
        }
        let scale = Complex64::new(1.0 / prob.sqrt(), 0.0);
        for a in &mut amps {
            *a *= scale;
        }
        branches.push(MeasurementBranch {
            probability: prob,
            outcome,
            post_state: PureState::new(psi.width(), amps)?,
        });
    }
    Ok(branches)
}

/// Outcome probabilities [P(0), P(1)] for one wire of a density matrix.
pub fn outcome_probabilities(rho: &DensityMatrix, qubit: QubitRef) -> Result<[f64; 2]> {
    if qubit.0 >= rho.width() {
        return Err(Error::DimensionMismatch {
            context: "measured qubit",
            expected: rho.width(),
            found: qubit.0,
        });
    }
    let bit = 1usize << qubit.0;
    let mut p1 = 0.0;
    for i in 0..rho.dim() {
        if i & bit != 0 {
            p1 += rho.matrix()[(i, i)].re;
        }
    }
    Ok([1.0 - p1, p1])
}

/// The two-projector measurement channel on one wire: off-diagonal blocks
/// between the outcome subspaces are zeroed.
pub fn dephase_qubit(rho: &DensityMatrix, qubit: QubitRef) -> Result<DensityMatrix> {
    if qubit.0 >= rho.width() {
        return Err(Error::DimensionMismatch {
            context: "measured qubit",
            expected: rho.width(),
            found: qubit.0,
        });
    }
    let bit = 1usize << qubit.0;
    let mut mat = rho.matrix().clone();
    for i in 0..rho.dim() {
        for j in 0..rho.dim() {
            if (i & bit) != (j & bit) {
                mat[(i, j)] = Complex64::ZERO;
            }
        }
    }
    DensityMatrix::new(rho.width(), mat)
}
