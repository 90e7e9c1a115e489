//! Controlled-operation lowering.
//!
//! A one-qubit control over an n-qubit operation is made shallow by copying
//! the control in the computational basis onto ancilla carriers — a CNOT
//! tree of depth ⌈log₂ m⌉, or a single fan-out gate — handing one carrier to
//! every gate of a layer, and then uncomputing the carriers back to |0⟩.

use crate::ir::{layers, Circuit, Gate, QubitRef, Register, RegisterLayout, Role};
use crate::{Error, Result};

/// Gates that expand `carriers[0]` onto the remaining carriers.
pub(crate) fn expansion_gates(carriers: &[QubitRef], use_fanout: bool) -> Vec<Gate> {
    let m = carriers.len();
    if m <= 1 {
        return Vec::new();
    }
    if use_fanout {
        let targets: Vec<usize> = carriers[1..].iter().map(|q| q.0).collect();
        return vec![Gate::fanout(carriers[0].0, &targets)];
    }
    let mut gates = Vec::new();
    let mut have = 1usize;
    while have < m {
        let new = have.min(m - have);
        for j in 0..new {
            gates.push(Gate::cnot(carriers[j].0, carriers[have + j].0));
        }
        have += new;
    }
    gates
}

/// Emit a controlled block: expand the control onto carriers, attach one
/// carrier per gate position within each layer, uncompute. `carriers[0]` is
/// the control itself and must not appear in the gates; `carriers` must
/// cover the widest layer.
pub(crate) fn controlled_block(
    gate_layers: &[Vec<Gate>],
    carriers: &[QubitRef],
    use_fanout: bool,
) -> Vec<Gate> {
    let expansion = expansion_gates(carriers, use_fanout);
    let mut out = expansion.clone();
    for layer in gate_layers {
        for (p, gate) in layer.iter().enumerate() {
            let mut controlled = gate.clone();
            controlled.controls.push(carriers[p]);
            out.push(controlled);
        }
    }
    out.extend(expansion.into_iter().rev());
    out
}

/// Lower `|0⟩⟨0| ⊗ I + |1⟩⟨1| ⊗ U_target` onto the gate basis.
///
/// The control occupies the first fresh wire after the target (passing a
/// wire inside the target is a collision); carrier ancillas are appended
/// past the control and returned to |0⟩. Without fan-out the depth is at
/// most 2⌈log₂ m⌉ + L for a target of L layers with at most m gates per
/// layer; with fan-out it is at most L + 2.
pub fn lower_controlled(target: &Circuit, control: QubitRef, use_fanout: bool) -> Result<Circuit> {
    if control.0 < target.width() {
        return Err(Error::ControlCollision { qubit: control.0 });
    }
    if control.0 != target.width() {
        return Err(Error::DimensionMismatch {
            context: "lowering control wire",
            expected: target.width(),
            found: control.0,
        });
    }
    let target = target.clone().validated()?;
    let packed = layers(&target);
    let m = packed.iter().map(Vec::len).max().unwrap_or(0);
    let copies: Vec<QubitRef> = (0..m.saturating_sub(1))
        .map(|i| QubitRef(control.0 + 1 + i))
        .collect();
    let mut carriers = vec![control];
    carriers.extend(copies.iter().copied());

    let gate_layers: Vec<Vec<Gate>> = packed
        .iter()
        .map(|layer| layer.iter().map(|&i| target.gates()[i].clone()).collect())
        .collect();
    let gates = controlled_block(&gate_layers, &carriers, use_fanout);

    let width = control.0 + 1 + copies.len();
    let mut inputs = target.inputs().to_vec();
    inputs.push(control);
    let mut ancillas = target.ancillas().to_vec();
    ancillas.extend(copies.iter().copied());
    let mut traced = target.traced().to_vec();
    traced.extend(copies.iter().copied());
    let mut outputs = target.outputs().to_vec();
    outputs.push(control);

    let mut registers = target.layout().registers.clone();
    // the control is an input of the lowered circuit
    registers.push(Register::new(
        "ctrl",
        Role::H(target.layout().max_block() + 1),
        vec![control],
    ));
    if !copies.is_empty() {
        registers.push(Register::new("copies", Role::Copy(1), copies));
    }
    Ok(Circuit::new(
        width,
        inputs,
        ancillas,
        gates,
        traced,
        outputs,
        RegisterLayout::new(registers),
    ))
}
