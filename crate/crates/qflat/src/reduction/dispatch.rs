//! Depth-preserving controlled dispatch: one fresh control qubit selects
//! which of two circuits acts, with every gate lowered through the carrier
//! machinery so log-depth inputs stay log-depth (constant with fan-out).

use crate::ir::{
    layers, permutation_gates, Circuit, Gate, QubitRef, Register, RegisterLayout, Role,
};
use crate::reduction::build::QCDInstance;
use crate::reduction::lower::controlled_block;
use crate::Result;

/// Rewrite a circuit onto canonical wires: inputs at [0, h), ancillas after
/// them (padded to `width`), and the output register relocated by swap
/// layers to the top wires [width − k, width) in declared order.
fn canonicalize(q: &Circuit, width: usize) -> Result<Circuit> {
    let q = q.clone().validated()?;
    let h = q.inputs().len();
    let k = q.outputs().len();

    // relabel: inputs to the low wires in declared order
    let mut map = vec![usize::MAX; q.width()];
    for (p, wire) in q.inputs().iter().enumerate() {
        map[wire.0] = p;
    }
    let mut next = h;
    for old in 0..q.width() {
        if map[old] == usize::MAX {
            map[old] = next;
            next += 1;
        }
    }
    let mut gates: Vec<Gate> = q
        .gates()
        .iter()
        .map(|g| g.remapped(|w| QubitRef(map[w.0])))
        .collect();

    // relocate outputs to [width − k, width) with at most two swap layers
    let mut perm: Vec<usize> = vec![usize::MAX; width];
    for (p, wire) in q.outputs().iter().enumerate() {
        perm[map[wire.0]] = width - k + p;
    }
    let mut slot = 0usize;
    for dest in perm.iter_mut() {
        if *dest == usize::MAX {
            *dest = slot;
            slot += 1;
        }
    }
    gates.extend(permutation_gates(&perm));

    let inputs: Vec<QubitRef> = (0..h).map(QubitRef).collect();
    let ancillas: Vec<QubitRef> = (h..width).map(QubitRef).collect();
    let traced: Vec<QubitRef> = (0..width - k).map(QubitRef).collect();
    let outputs: Vec<QubitRef> = (width - k..width).map(QubitRef).collect();
    let layout = RegisterLayout::new(vec![
        Register::new("h1", Role::H(1), inputs.clone()),
        Register::new("a1", Role::A(1), ancillas.clone()),
        Register::new("b1", Role::B(1), traced.clone()),
        Register::new("k1", Role::K(1), outputs.clone()),
    ]);
    Circuit::new(width, inputs, ancillas, gates, traced, outputs, layout).validated()
}

/// A circuit that applies Q₁'s unitary part when the fresh control is |0⟩
/// and Q₂'s when it is |1⟩. The control rides along as the last output.
pub fn build_controlled_dispatch(instance: &QCDInstance, use_fanout: bool) -> Result<Circuit> {
    let w = instance.q1.width().max(instance.q2.width());
    let a = canonicalize(&instance.q1, w)?;
    let b = canonicalize(&instance.q2, w)?;
    let h = a.inputs().len();
    let k = a.outputs().len();

    let gate_layers = |c: &Circuit| -> Vec<Vec<Gate>> {
        layers(c)
            .iter()
            .map(|layer| layer.iter().map(|&i| c.gates()[i].clone()).collect())
            .collect()
    };
    let layers_a = gate_layers(&a);
    let layers_b = gate_layers(&b);
    let m = layers_a
        .iter()
        .chain(&layers_b)
        .map(Vec::len)
        .max()
        .unwrap_or(0);

    let control = QubitRef(w);
    let copies: Vec<QubitRef> = (0..m.saturating_sub(1)).map(|i| QubitRef(w + 1 + i)).collect();
    let mut carriers = vec![control];
    carriers.extend(copies.iter().copied());
    let width = w + 1 + copies.len();

    let mut gates = vec![Gate::x(control.0)];
    gates.extend(controlled_block(&layers_a, &carriers, use_fanout));
    gates.push(Gate::x(control.0));
    gates.extend(controlled_block(&layers_b, &carriers, use_fanout));

    let mut inputs: Vec<QubitRef> = (0..h).map(QubitRef).collect();
    inputs.push(control);
    let mut ancillas: Vec<QubitRef> = (h..w).map(QubitRef).collect();
    ancillas.extend(copies.iter().copied());
    let mut traced: Vec<QubitRef> = (0..w - k).map(QubitRef).collect();
    traced.extend(copies.iter().copied());
    let mut outputs: Vec<QubitRef> = (w - k..w).map(QubitRef).collect();
    outputs.push(control);

    // the control is a genuine input of the dispatch channel, so it gets an
    // input-family role
    let mut registers = vec![
        Register::new("h1", Role::H(1), (0..h).map(QubitRef).collect()),
        Register::new("ctrl", Role::H(2), vec![control]),
        Register::new("b1", Role::B(1), (0..w - k).map(QubitRef).collect()),
        Register::new("k1", Role::K(1), (w - k..w).map(QubitRef).collect()),
    ];
    if h < w {
        registers.insert(1, Register::new("a1", Role::A(1), (h..w).map(QubitRef).collect()));
    }
    if !copies.is_empty() {
        registers.push(Register::new("copies", Role::Copy(1), copies));
    }
    Circuit::new(
        width,
        inputs,
        ancillas,
        gates,
        traced,
        outputs,
        RegisterLayout::new(registers),
    )
    .validated()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::{depth, CostModel};
    use crate::sim::{
        apply_circuit_density, apply_circuit_pure, random_pure, reduce_pure, PureState,
    };

    fn sample_q1() -> Circuit {
        Circuit::channel(
            2,
            1,
            vec![Gate::h(0), Gate::cnot(0, 1)],
            vec![QubitRef(0)],
            vec![QubitRef(1)],
        )
    }

    fn sample_q2() -> Circuit {
        // different internal layout: output on the input wire
        Circuit::channel(
            2,
            1,
            vec![Gate::t(0), Gate::swap2(0, 1), Gate::swap2(0, 1), Gate::x(0)],
            vec![QubitRef(1)],
            vec![QubitRef(0)],
        )
    }

    fn dispatch_branch_output(
        dispatch: &Circuit,
        psi: &PureState,
        control: u8,
    ) -> crate::sim::DensityMatrix {
        let input = psi.tensor(&PureState::basis(1, control as usize));
        let full = apply_circuit_pure(dispatch, &input).unwrap();
        // channel output without the control (the last declared output)
        let keep = &dispatch.outputs()[..dispatch.outputs().len() - 1];
        reduce_pure(&full, keep).unwrap()
    }

    #[test]
    fn control_zero_runs_q1_and_control_one_runs_q2() {
        let instance = QCDInstance::new(sample_q1(), sample_q2(), 2.0, 0.5).unwrap();
        for fanout in [false, true] {
            let dispatch = build_controlled_dispatch(&instance, fanout).unwrap();
            for seed in 0..20 {
                let psi = random_pure(1, seed);
                let rho = psi.projector();
                let out0 = dispatch_branch_output(&dispatch, &psi, 0);
                let want0 = apply_circuit_density(&sample_q1(), &rho).unwrap();
                assert!(
                    (out0.matrix() - want0.matrix()).norm() < 1e-11,
                    "q1 branch mismatch (fanout={fanout}, seed={seed})"
                );
                let out1 = dispatch_branch_output(&dispatch, &psi, 1);
                let want1 = apply_circuit_density(&sample_q2(), &rho).unwrap();
                assert!(
                    (out1.matrix() - want1.matrix()).norm() < 1e-11,
                    "q2 branch mismatch (fanout={fanout}, seed={seed})"
                );
            }
        }
    }

    #[test]
    fn identical_circuits_ignore_the_control() {
        let instance = QCDInstance::new(sample_q1(), sample_q1(), 2.0, 0.5).unwrap();
        let dispatch = build_controlled_dispatch(&instance, false).unwrap();
        let psi = random_pure(1, 5);
        let out0 = dispatch_branch_output(&dispatch, &psi, 0);
        let out1 = dispatch_branch_output(&dispatch, &psi, 1);
        assert!((out0.matrix() - out1.matrix()).norm() < 1e-11);
    }

    #[test]
    fn fanout_dispatch_depth_is_constant_for_constant_depth_inputs() {
        // one layer of n parallel gates: the fan-out dispatch depth must not
        // grow with n
        let mut depths = Vec::new();
        for n in [4usize, 8, 16] {
            let q = Circuit::unitary(n, (0..n).map(Gate::h).collect());
            let instance = QCDInstance::new(q.clone(), q, 2.0, 0.5).unwrap();
            let dispatch = build_controlled_dispatch(&instance, true).unwrap();
            depths.push(depth(&dispatch, CostModel::FANOUT_FREE).unwrap().layer_count);
        }
        assert!(depths.windows(2).all(|w| w[0] == w[1]), "depths {depths:?}");
        assert!(depths[0] <= 10, "depths {depths:?}");
    }
}
