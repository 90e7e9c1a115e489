//! Circuit application kernels.
//!
//! Pure states get the usual stride kernels; density matrices are updated as
//! ρ ← UρU* by running the same kernel over the row index and the conjugated
//! kernel over the column index. Permutation-type gates (X, CNOT, SWAP2,
//! FANOUT) move amplitudes without arithmetic, so their action is exact.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::ir::{Circuit, Gate, GateKind, QubitRef};
use crate::sim::{DensityMatrix, PureState};
use crate::{Error, Result};

/// Scatter the bits of `small` onto the listed wire positions.
pub fn scatter_bits(small: usize, positions: &[QubitRef]) -> usize {
    positions
        .iter()
        .enumerate()
        .fold(0, |acc, (p, q)| acc | (((small >> p) & 1) << q.0))
}

/// Gather the listed wire bits of `full` into a compact index.
pub fn gather_bits(full: usize, positions: &[QubitRef]) -> usize {
    positions
        .iter()
        .enumerate()
        .fold(0, |acc, (p, q)| acc | (((full >> q.0) & 1) << p))
}

/// Wires of `[0, width)` not present in `keep`, ascending.
pub fn complement(width: usize, keep: &[QubitRef]) -> Vec<QubitRef> {
    let mut present = vec![false; width];
    for q in keep {
        present[q.0] = true;
    }
    (0..width).filter(|&i| !present[i]).map(QubitRef).collect()
}

fn controls_mask(gate: &Gate) -> usize {
    gate.controls.iter().fold(0, |acc, q| acc | (1usize << q.0))
}

/// Apply one gate to a state vector. With `conj` set the elementwise
/// conjugate of the gate unitary is applied instead (used for the column
/// pass of density updates).
pub fn apply_gate_amps(amps: &mut [Complex64], gate: &Gate, conj: bool) {
    let cmask = controls_mask(gate);
    match gate.kind {
        GateKind::X => {
            let t = 1usize << gate.operands[0].0;
            permute_pairs(amps, cmask, t);
        }
        GateKind::Cnot => {
            let c = 1usize << gate.operands[0].0;
            let t = 1usize << gate.operands[1].0;
            permute_pairs(amps, cmask | c, t);
        }
        GateKind::Fanout { .. } => {
            let c = 1usize << gate.operands[0].0;
            let tmask = gate.operands[1..]
                .iter()
                .fold(0usize, |acc, q| acc | (1 << q.0));
            permute_pairs(amps, cmask | c, tmask);
        }
        GateKind::Swap2 => {
            let a = 1usize << gate.operands[0].0;
            let b = 1usize << gate.operands[1].0;
            // indices with the two bits unequal, paired by flipping both
            for idx in 0..amps.len() {
                if idx & cmask == cmask && idx & a != 0 && idx & b == 0 {
                    amps.swap(idx, idx ^ a ^ b);
                }
            }
        }
        GateKind::Z => phase_flip(amps, cmask | (1 << gate.operands[0].0)),
        GateKind::Cz => phase_flip(
            amps,
            cmask | (1 << gate.operands[0].0) | (1 << gate.operands[1].0),
        ),
        GateKind::S => {
            let p = if conj { -Complex64::I } else { Complex64::I };
            phase_mul(amps, cmask | (1 << gate.operands[0].0), p);
        }
        GateKind::T => {
            let angle = if conj { -1.0 } else { 1.0 } * std::f64::consts::FRAC_PI_4;
            phase_mul(
                amps,
                cmask | (1 << gate.operands[0].0),
                Complex64::from_polar(1.0, angle),
            );
        }
        GateKind::H => {
            let m = gate.kind.matrix();
            let m = if conj { m.conjugate() } else { m };
            apply_matrix_1q(amps, gate.operands[0].0, cmask, &m);
        }
    }
}

/// Swap amplitude pairs idx ↔ idx^flip over indices satisfying `required`.
/// `flip` and `required` are disjoint, so both members of a pair satisfy the
/// requirement together.
fn permute_pairs(amps: &mut [Complex64], required: usize, flip: usize) {
    debug_assert!(flip != 0 && flip & required == 0);
    let pivot = 1usize << flip.trailing_zeros();
    for idx in 0..amps.len() {
        if idx & required == required && idx & pivot == 0 {
            amps.swap(idx, idx ^ flip);
        }
    }
}

fn phase_flip(amps: &mut [Complex64], required: usize) {
    for (idx, a) in amps.iter_mut().enumerate() {
        if idx & required == required {
            *a = -*a;
        }
    }
}

fn phase_mul(amps: &mut [Complex64], required: usize, phase: Complex64) {
    for (idx, a) in amps.iter_mut().enumerate() {
        if idx & required == required {
            *a *= phase;
        }
    }
}

fn apply_matrix_1q(amps: &mut [Complex64], wire: usize, cmask: usize, m: &DMatrix<Complex64>) {
    let bit = 1usize << wire;
    for idx in 0..amps.len() {
        if idx & bit == 0 && idx & cmask == cmask {
            let hi = idx | bit;
            let a0 = amps[idx];
            let a1 = amps[hi];
            amps[idx] = m[(0, 0)] * a0 + m[(0, 1)] * a1;
            amps[hi] = m[(1, 0)] * a0 + m[(1, 1)] * a1;
        }
    }
}

/// Apply the circuit's gate list to a full-width state vector in place.
pub fn apply_gates_amps(amps: &mut [Complex64], gates: &[Gate]) {
    for gate in gates {
        apply_gate_amps(amps, gate, false);
    }
}

/// U (ψ ⊗ |0…0⟩): embed the input state on the circuit's input wires, run
/// every gate, and return the full-width state (nothing traced).
pub fn apply_circuit_pure(circuit: &Circuit, psi: &PureState) -> Result<PureState> {
    if psi.width() != circuit.inputs().len() {
        return Err(Error::DimensionMismatch {
            context: "apply_circuit_pure input",
            expected: circuit.inputs().len(),
            found: psi.width(),
        });
    }
    let mut amps = vec![Complex64::ZERO; 1 << circuit.width()];
    for (k, &a) in psi.amplitudes().iter().enumerate() {
        if a != Complex64::ZERO {
            amps[scatter_bits(k, circuit.inputs())] = a;
        }
    }
    apply_gates_amps(&mut amps, circuit.gates());
    PureState::new(circuit.width(), amps)
}

fn apply_gate_density_full(mat: &mut DMatrix<Complex64>, gate: &Gate) {
    let dim = mat.nrows();
    let mut scratch = vec![Complex64::ZERO; dim];
    // row pass: each column is a ket
    for j in 0..dim {
        for i in 0..dim {
            scratch[i] = mat[(i, j)];
        }
        apply_gate_amps(&mut scratch, gate, false);
        for i in 0..dim {
            mat[(i, j)] = scratch[i];
        }
    }
    // column pass: each row against the conjugated unitary
    for i in 0..dim {
        for j in 0..dim {
            scratch[j] = mat[(i, j)];
        }
        apply_gate_amps(&mut scratch, gate, true);
        for j in 0..dim {
            mat[(i, j)] = scratch[j];
        }
    }
}

/// The channel of the circuit: embed ρ on the inputs (ancillas |0⟩), apply
/// every gate as ρ ← UρU*, and trace out the traced wires. The result's
/// qubit order follows the circuit's declared output order.
pub fn apply_circuit_density(circuit: &Circuit, rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.width() != circuit.inputs().len() {
        return Err(Error::DimensionMismatch {
            context: "apply_circuit_density input",
            expected: circuit.inputs().len(),
            found: rho.width(),
        });
    }
    let dim = 1usize << circuit.width();
    let mut full = DMatrix::zeros(dim, dim);
    for i in 0..rho.dim() {
        let fi = scatter_bits(i, circuit.inputs());
        for j in 0..rho.dim() {
            full[(fi, scatter_bits(j, circuit.inputs()))] = rho.matrix()[(i, j)];
        }
    }
    for gate in circuit.gates() {
        apply_gate_density_full(&mut full, gate);
    }
    let full = DensityMatrix::new(circuit.width(), full)?;
    crate::sim::partial_trace(&full, circuit.outputs())
}

/// Dense unitary of the full width, built by running every basis state
/// through the gate kernels. Only sensible for small widths.
pub fn circuit_unitary(circuit: &Circuit) -> Result<DMatrix<Complex64>> {
    if circuit.width() > 12 {
        return Err(Error::CapExceeded {
            what: "circuit_unitary width",
            limit: 12,
            requested: circuit.width(),
        });
    }
    let dim = 1usize << circuit.width();
    let mut u = DMatrix::zeros(dim, dim);
    for col in 0..dim {
        let mut amps = vec![Complex64::ZERO; dim];
        amps[col] = Complex64::ONE;
        apply_gates_amps(&mut amps, circuit.gates());
        for row in 0..dim {
            u[(row, col)] = amps[row];
        }
    }
    Ok(u)
}
