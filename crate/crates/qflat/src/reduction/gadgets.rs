//! Swap operator and swap test as circuits.

use crate::ir::{Circuit, Gate, QubitRef, Register, RegisterLayout, Role};
use crate::sim::{apply_circuit_density, outcome_probabilities, DensityMatrix};
use crate::Result;

/// The swap operator W on n + n qubits as a single layer of SWAP2 gates:
/// wire i exchanges with wire n + i. W is hermitian, unitary, and depth 1.
pub fn swap_operator_gadget(n: usize) -> Circuit {
    let gates = (0..n).map(|i| Gate::swap2(i, n + i)).collect();
    let mut c = Circuit::unitary(2 * n, gates);
    c.set_layout(RegisterLayout::new(vec![
        Register::new("left", Role::H(1), (0..n).map(QubitRef).collect()),
        Register::new("right", Role::H(2), (n..2 * n).map(QubitRef).collect()),
    ]));
    c
}

/// The swap test on n + n qubits: a fresh |0⟩ result qubit gets H, controls
/// W, gets H again. Measuring the result qubit as 1 is the antisymmetric
/// outcome. The result qubit is wire 2n.
pub fn swap_test_gadget(n: usize) -> Circuit {
    let t = 2 * n;
    let mut gates = vec![Gate::h(t)];
    gates.extend((0..n).map(|i| Gate::swap2(i, n + i).with_controls(vec![QubitRef(t)])));
    gates.push(Gate::h(t));
    let inputs: Vec<QubitRef> = (0..2 * n).map(QubitRef).collect();
    let all: Vec<QubitRef> = (0..=2 * n).map(QubitRef).collect();
    let mut c = Circuit::new(
        2 * n + 1,
        inputs,
        vec![QubitRef(t)],
        gates,
        Vec::new(),
        all,
        RegisterLayout::default(),
    );
    c.set_layout(RegisterLayout::new(vec![
        Register::new("left", Role::H(1), (0..n).map(QubitRef).collect()),
        Register::new("right", Role::H(2), (n..2 * n).map(QubitRef).collect()),
        Register::new("result", Role::Test(1), vec![QubitRef(t)]),
    ]));
    c
}

/// P(result = 1) when the swap test runs on ρ.
pub fn swap_test_fail_prob(n: usize, rho: &DensityMatrix) -> Result<f64> {
    let gadget = swap_test_gadget(n);
    let out = apply_circuit_density(&gadget, rho)?;
    let probs = outcome_probabilities(&out, QubitRef(2 * n))?;
    Ok(probs[1])
}
