//! Completeness witnesses and their exact evaluation.
//!
//! For an input |ψ⟩ the witness feeds every block the state the previous
//! piece would have produced — ψ, U₁ψ, U₂U₁ψ, … — with matching copies on
//! the auxiliary comparison registers, so every swap test passes with
//! probability one and the final block reproduces the original circuit's
//! output.
//!
//! Constructed circuits at even modest sizes are far too wide for dense
//! simulation of the whole width, but on a product input the swap-test
//! machinery of boundary j touches only blocks j and j+1 plus boundary-local
//! wires. [`evaluate_witness`] therefore sweeps a window across the
//! boundaries in a topological order of the same gate list, retiring wires
//! once no later gate can touch them. Retirement is exact and self-checking:
//! the kept block must be pure again (its reduced state has unit purity up
//! to tolerance, reported to the caller), which is itself part of what
//! completeness asserts.

use num_complex::Complex64;

use crate::ir::{pad_pieces, slice, Circuit, QubitRef};
use crate::reduction::build::SideStructure;
use crate::sim::{apply_gates_amps, apply_circuit_pure, DensityMatrix, PureState};
use crate::{Error, Result};

/// Product witness for one constructed circuit, stored factor by factor in
/// the input-register order (blocks first, then auxiliary registers).
#[derive(Clone, Debug)]
pub struct WitnessState {
    /// Factor for block j's input: ψ for block 0, U_j⋯U₁ψ afterwards.
    pub block_factors: Vec<PureState>,
    /// Factor for auxiliary register j: the intended input of block j+1.
    pub aux_factors: Vec<PureState>,
}

impl WitnessState {
    /// The full pure state over the constructed circuit's input wires.
    pub fn assemble(&self) -> PureState {
        let mut state = self.block_factors[0].clone();
        for f in &self.block_factors[1..] {
            state = state.tensor(f);
        }
        for f in &self.aux_factors {
            state = state.tensor(f);
        }
        state
    }
}

/// Witness for the construction built from `q` at its own gate count.
pub fn witness_input(q: &Circuit, psi: &PureState) -> Result<WitnessState> {
    let pieces = slice(q)?;
    let n = pieces.len();
    witness_from_pieces(&pieces, psi, n)
}

/// Witness for a construction padded to `n` pieces (pairing with a larger
/// circuit pads the piece list with identities, and the witness must match).
pub fn witness_input_padded(q: &Circuit, psi: &PureState, n: usize) -> Result<WitnessState> {
    let mut pieces = slice(q)?;
    if pieces.len() > n {
        return Err(Error::InvalidInstance(format!(
            "cannot pad {} pieces down to {n}",
            pieces.len()
        )));
    }
    pad_pieces(&mut pieces, n);
    witness_from_pieces(&pieces, psi, n)
}

fn witness_from_pieces(pieces: &[Circuit], psi: &PureState, n: usize) -> Result<WitnessState> {
    if psi.width() != pieces[0].inputs().len() {
        return Err(Error::DimensionMismatch {
            context: "witness input",
            expected: pieces[0].inputs().len(),
            found: psi.width(),
        });
    }
    // chain[j] is the intended input of piece j
    let mut chain: Vec<PureState> = vec![psi.clone()];
    if n > 1 {
        let mut current = apply_circuit_pure(&pieces[0], psi)?;
        chain.push(current.clone());
        for piece in pieces.iter().take(n - 1).skip(1) {
            apply_gates_amps(current.amplitudes_mut(), piece.gates());
            chain.push(current.clone());
        }
    }
    Ok(WitnessState {
        block_factors: chain[..n].to_vec(),
        aux_factors: chain[1..n].to_vec(),
    })
}

#[derive(Clone, Debug)]
pub struct WitnessEvaluation {
    /// (P[first test = 1], P[second test = 1]) per boundary.
    pub test_fail_probs: Vec<(f64, f64)>,
    /// Reduced state on the final block's output register.
    pub output: DensityMatrix,
    /// Smallest purity seen when retiring a block between boundaries;
    /// completeness requires this to stay at 1 within tolerance.
    pub min_retirement_purity: f64,
}

/// Exact boundary-sweep evaluation of a constructed circuit on a witness.
pub fn evaluate_witness(
    circuit: &Circuit,
    structure: &SideStructure,
    witness: &WitnessState,
) -> Result<WitnessEvaluation> {
    let n = structure.n;
    let gates = circuit.gates();

    let mut window = Window::empty();
    window.extend_state(&structure.block_inputs[0], &witness.block_factors[0]);
    let block0_anc: Vec<QubitRef> = structure.blocks[0]
        .iter()
        .copied()
        .filter(|q| !structure.block_inputs[0].contains(q))
        .collect();
    window.extend_zero(&block0_anc);
    for &g in &structure.piece_gates[0] {
        window.apply(&gates[g]);
    }

    let mut test_fail_probs = Vec::with_capacity(n - 1);
    let mut min_purity = 1.0f64;
    for j in 0..n - 1 {
        window.extend_state(&structure.block_inputs[j + 1], &witness.block_factors[j + 1]);
        window.extend_state(&structure.aux[j], &witness.aux_factors[j]);
        window.extend_zero(&[structure.ctrls[j]]);
        let (t1, t2) = structure.tests[j];
        window.extend_zero(&[t1, t2]);
        window.extend_zero(&structure.copies[j]);

        let b = &structure.boundaries[j];
        window.apply(&gates[b.h_ctrl]);
        for &g in &b.test1 {
            window.apply(&gates[g]);
        }
        window.apply(&gates[b.x_ctrl]);
        for &g in &structure.piece_gates[j + 1] {
            window.apply(&gates[g]);
        }
        for &g in &b.test2 {
            window.apply(&gates[g]);
        }

        test_fail_probs.push((window.prob_one(t1), window.prob_one(t2)));
        let purity = window.retire_to(&structure.blocks[j + 1])?;
        min_purity = min_purity.min(purity);
    }

    let output = window.reduce(&structure.k_out)?;
    Ok(WitnessEvaluation {
        test_fail_probs,
        output,
        min_retirement_purity: min_purity,
    })
}

/// A pure state over an explicit set of global wires; local bit p is
/// `wires[p]`.
struct Window {
    wires: Vec<QubitRef>,
    amps: Vec<Complex64>,
}

impl Window {
    fn empty() -> Self {
        Window {
            wires: Vec::new(),
            amps: vec![Complex64::ONE],
        }
    }

    fn local(&self, q: QubitRef) -> usize {
        self.wires
            .iter()
            .position(|&w| w == q)
            .expect("wire present in window")
    }

    fn extend_state(&mut self, wires: &[QubitRef], factor: &PureState) {
        debug_assert_eq!(wires.len(), factor.width());
        let current = PureState::new(self.wires.len(), self.amps.clone()).expect("window state");
        let combined = current.tensor(factor);
        self.amps = combined.amplitudes().to_vec();
        self.wires.extend(wires.iter().copied());
    }

    fn extend_zero(&mut self, wires: &[QubitRef]) {
        if wires.is_empty() {
            return;
        }
        self.extend_state(wires, &PureState::zero(wires.len()));
    }

    fn apply(&mut self, gate: &crate::ir::Gate) {
        let local_gate = gate.remapped(|q| QubitRef(self.local(q)));
        crate::sim::apply_gate_amps(&mut self.amps, &local_gate, false);
    }

    fn prob_one(&self, q: QubitRef) -> f64 {
        let bit = 1usize << self.local(q);
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & bit != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    fn reduce(&self, keep: &[QubitRef]) -> Result<DensityMatrix> {
        let state = PureState::new(self.wires.len(), self.amps.clone())?;
        let local: Vec<QubitRef> = keep.iter().map(|&q| QubitRef(self.local(q))).collect();
        crate::sim::reduce_pure(&state, &local)
    }

    /// Drop everything outside `keep`, verifying the kept state is pure.
    /// Returns the purity of the kept reduction.
    fn retire_to(&mut self, keep: &[QubitRef]) -> Result<f64> {
        let reduced = self.reduce(keep)?;
        let purity = (reduced.matrix() * reduced.matrix()).trace().re;
        let eig = reduced.matrix().clone().symmetric_eigen();
        let top = (0..eig.eigenvalues.len())
            .max_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]))
            .expect("nonempty spectrum");
        let mut amps: Vec<Complex64> = eig.eigenvectors.column(top).iter().copied().collect();
        let phase = amps
            .iter()
            .find(|c| c.norm() > 1e-8)
            .map(|c| c / c.norm())
            .unwrap_or(Complex64::ONE);
        for a in &mut amps {
            *a *= phase.conj();
        }
        self.wires = keep.to_vec();
        self.amps = amps;
        Ok(purity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::Gate;
    use crate::metrics::fidelity;
    use crate::reduction::build::{build_log_depth_ci, CIInstance, ReductionOptions};
    use crate::sim::{apply_circuit_density, random_pure, reduce_pure};

    #[test]
    fn witness_of_single_piece_is_the_input() {
        let q = Circuit::unitary(1, vec![Gate::h(0)]);
        let psi = random_pure(1, 3);
        let w = witness_input(&q, &psi).unwrap();
        assert_eq!(w.block_factors.len(), 1);
        assert!(w.aux_factors.is_empty());
        assert_eq!(w.block_factors[0], psi);
    }

    #[test]
    fn witness_blocks_carry_iterated_images() {
        // H then X on |0⟩: blocks carry |0⟩ and |+⟩
        let q = Circuit::unitary(1, vec![Gate::h(0), Gate::x(0)]);
        let w = witness_input(&q, &PureState::zero(1)).unwrap();
        assert_eq!(w.block_factors.len(), 2);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let plus = &w.block_factors[1];
        assert!((plus.amplitudes()[0].re - s).abs() < 1e-12);
        assert!((plus.amplitudes()[1].re - s).abs() < 1e-12);
        assert_eq!(w.aux_factors[0], w.block_factors[1]);
    }

    #[test]
    fn window_evaluation_matches_dense_simulation() {
        // small enough to simulate the constructed circuit densely
        let q = Circuit::unitary(1, vec![Gate::h(0), Gate::t(0), Gate::x(0)]);
        let instance = CIInstance::new(q.clone(), q.clone(), 1.0, 0.5).unwrap();
        let (c1, _, manifest) = build_log_depth_ci(&instance, &ReductionOptions::default()).unwrap();
        let psi = random_pure(1, 17);
        let witness = witness_input(&q, &psi).unwrap();

        let eval = evaluate_witness(&c1, &manifest.c1_structure, &witness).unwrap();

        let full = apply_circuit_pure(&c1, &witness.assemble()).unwrap();
        let dense_out = reduce_pure(&full, &manifest.c1_structure.k_out).unwrap();
        assert!((eval.output.matrix() - dense_out.matrix()).norm() < 1e-12);
        for (j, &(t1, t2)) in manifest.c1_structure.tests.iter().enumerate() {
            let p1 = 1.0 - crate::sim::reduce_pure(&full, &[t1]).unwrap().matrix()[(0, 0)].re;
            let p2 = 1.0 - crate::sim::reduce_pure(&full, &[t2]).unwrap().matrix()[(0, 0)].re;
            let (w1, w2) = eval.test_fail_probs[j];
            assert!((p1 - w1).abs() < 1e-12 && (p2 - w2).abs() < 1e-12);
        }
        assert!(eval.min_retirement_purity > 1.0 - 1e-12);
    }

    #[test]
    fn witness_passes_all_tests_and_reproduces_the_channel() {
        let q = Circuit::channel(
            2,
            1,
            vec![Gate::h(0), Gate::cnot(0, 1), Gate::t(1)],
            vec![QubitRef(0)],
            vec![QubitRef(1)],
        );
        let instance = CIInstance::new(q.clone(), q.clone(), 1.0, 0.5).unwrap();
        let (c1, _, manifest) = build_log_depth_ci(&instance, &ReductionOptions::default()).unwrap();
        for seed in 0..5 {
            let psi = random_pure(1, seed);
            let witness = witness_input(&q, &psi).unwrap();
            let eval = evaluate_witness(&c1, &manifest.c1_structure, &witness).unwrap();
            for &(p1, p2) in &eval.test_fail_probs {
                assert!(p1 < 1e-9 && p2 < 1e-9, "swap test failed on witness");
            }
            assert!(eval.min_retirement_purity > 1.0 - 1e-9);
            let direct = apply_circuit_density(&q, &psi.projector()).unwrap();
            let f = fidelity(eval.output.matrix(), direct.matrix()).unwrap();
            assert!(f >= 1.0 - 1e-9, "output fidelity {f}");
            // channel faithfulness is exact, not just high-fidelity
            assert!((eval.output.matrix() - direct.matrix()).norm() < 1e-12);
        }
    }

    #[test]
    fn padded_witness_matches_padded_construction() {
        let q1 = Circuit::unitary(1, vec![Gate::h(0)]);
        let q2 = Circuit::unitary(1, vec![Gate::h(0), Gate::x(0), Gate::z(0)]);
        let instance = CIInstance::new(q1.clone(), q2, 1.0, 0.5).unwrap();
        let (c1, _, manifest) = build_log_depth_ci(&instance, &ReductionOptions::default()).unwrap();
        let psi = random_pure(1, 9);
        let witness = witness_input_padded(&q1, &psi, manifest.n).unwrap();
        let eval = evaluate_witness(&c1, &manifest.c1_structure, &witness).unwrap();
        for &(p1, p2) in &eval.test_fail_probs {
            assert!(p1 < 1e-9 && p2 < 1e-9);
        }
        let direct = apply_circuit_density(&q1, &psi.projector()).unwrap();
        assert!((eval.output.matrix() - direct.matrix()).norm() < 1e-11);
    }
}
