//! The depth-reduction construction.
//!
//! Each circuit of an instance is sliced into single-gate pieces U₁…U_n
//! (U₁ also absorbs the ancilla preparation) which run in parallel, one
//! block of wires per piece. The prover supplies every block's input; for
//! every boundary between consecutive pieces an auxiliary register is first
//! compared against the next block's input and then against the previous
//! block's output, by swap tests. A |+⟩ control with an X between the two
//! tests makes exactly one of them execute per branch, and an unperformed
//! test leaves its result qubit |0⟩. Each circuit's output keeps the final
//! block's output register, its own test results, and dummy |0⟩ qubits that
//! sit opposite the *other* circuit's test results, so a failing test drags
//! the output fidelity down.
//!
//! All controlled gates go through the carrier-copy lowering, so the depth
//! is at most `DEPTH_LOG_COEFF·⌈log₂ s⌉ + DEPTH_LOG_OFFSET` for compared
//! registers of s wires, and at most `DEPTH_FANOUT_CONST` when fan-out gates
//! are allowed.

use serde::{Deserialize, Serialize};

use crate::ir::{
    pad_pieces, slice, tensor_parallel, Circuit, Gate, QubitRef, Register, RegisterLayout, Role,
};
use crate::reduction::lower::expansion_gates;
use crate::sim::complement;
use crate::{Error, Result};

/// Depth bound coefficient on ⌈log₂ s⌉.
pub const DEPTH_LOG_COEFF: usize = 4;
/// Depth bound constant term.
pub const DEPTH_LOG_OFFSET: usize = 8;
/// Depth bound with fan-out, independent of size.
pub const DEPTH_FANOUT_CONST: usize = 12;

/// A close-images instance: do Q₁ and Q₂ have inputs with outputs of
/// fidelity at least `a` (yes) versus at most `b` (no)?
#[derive(Clone, Debug)]
pub struct CIInstance {
    pub q1: Circuit,
    pub q2: Circuit,
    pub a: f64,
    pub b: f64,
}

impl CIInstance {
    pub fn new(q1: Circuit, q2: Circuit, a: f64, b: f64) -> Result<Self> {
        if !(0.0 < b && b < a && a <= 1.0) {
            return Err(Error::InvalidInstance(format!(
                "thresholds must satisfy 0 < b < a <= 1, got a = {a}, b = {b}"
            )));
        }
        check_matching_spaces(&q1, &q2)?;
        Ok(CIInstance { q1, q2, a, b })
    }
}

/// A circuit-distinguishability instance: is ‖Q₁ − Q₂‖⋄ at least `a` (yes)
/// versus at most `b` (no)?
#[derive(Clone, Debug)]
pub struct QCDInstance {
    pub q1: Circuit,
    pub q2: Circuit,
    pub a: f64,
    pub b: f64,
}

impl QCDInstance {
    pub fn new(q1: Circuit, q2: Circuit, a: f64, b: f64) -> Result<Self> {
        if !(0.0 <= b && b < a && a <= 2.0) {
            return Err(Error::InvalidInstance(format!(
                "thresholds must satisfy 0 <= b < a <= 2, got a = {a}, b = {b}"
            )));
        }
        check_matching_spaces(&q1, &q2)?;
        Ok(QCDInstance { q1, q2, a, b })
    }
}

fn check_matching_spaces(q1: &Circuit, q2: &Circuit) -> Result<()> {
    if q1.inputs().len() != q2.inputs().len() {
        return Err(Error::DimensionMismatch {
            context: "instance input spaces",
            expected: q1.inputs().len(),
            found: q2.inputs().len(),
        });
    }
    if q1.outputs().len() != q2.outputs().len() {
        return Err(Error::DimensionMismatch {
            context: "instance output spaces",
            expected: q1.outputs().len(),
            found: q2.outputs().len(),
        });
    }
    Ok(())
}

#[derive(Copy, Clone, Debug)]
pub struct ReductionOptions {
    pub use_fanout: bool,
    /// Parallel repetitions of the constructed pair. Block granularity is
    /// fixed at one gate per piece.
    pub repetitions: usize,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions {
            use_fanout: false,
            repetitions: 1,
        }
    }
}

/// Gate indices making up one boundary's machinery.
#[derive(Clone, Debug, Default)]
pub struct BoundaryGates {
    pub h_ctrl: usize,
    pub test1: Vec<usize>,
    pub x_ctrl: usize,
    pub test2: Vec<usize>,
}

/// Wire map and gate segments of one constructed circuit.
#[derive(Clone, Debug, Default)]
pub struct SideStructure {
    pub n: usize,
    pub block_width: usize,
    /// All wires of block j.
    pub blocks: Vec<Vec<QubitRef>>,
    /// Input wires of block j (block 0 reads only its H part).
    pub block_inputs: Vec<Vec<QubitRef>>,
    pub aux: Vec<Vec<QubitRef>>,
    pub ctrls: Vec<QubitRef>,
    /// (first, second) result qubits per boundary.
    pub tests: Vec<(QubitRef, QubitRef)>,
    pub copies: Vec<Vec<QubitRef>>,
    pub dummies: Vec<QubitRef>,
    /// Output register of the last block, in the original order.
    pub k_out: Vec<QubitRef>,
    pub boundaries: Vec<BoundaryGates>,
    /// Gate indices per block's piece.
    pub piece_gates: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ManifestRegister {
    pub name: String,
    pub role: String,
    pub qubits: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DepthBound {
    /// Coefficient A of A·⌈log₂ s⌉ + B.
    pub a: usize,
    /// Constant term B.
    pub b: usize,
    /// Constant bound D with fan-out, when applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ManifestRegisters {
    pub c1: Vec<ManifestRegister>,
    pub c2: Vec<ManifestRegister>,
}

/// What the construction produced: block count, register map, the asserted
/// depth constants, and the evaluation structures (not serialized).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConstructionManifest {
    pub n: usize,
    pub registers: ManifestRegisters,
    pub depth_bound: DepthBound,
    pub repetitions: usize,
    pub use_fanout: bool,
    /// n = 1 means no boundaries: the constructed circuits carry no tests.
    pub trivial: bool,
    /// Width s of the largest compared register.
    pub compared_register_width: usize,
    #[serde(skip)]
    pub c1_structure: SideStructure,
    #[serde(skip)]
    pub c2_structure: SideStructure,
}

impl ConstructionManifest {
    /// The asserted depth bound for this instance.
    pub fn depth_limit(&self) -> usize {
        match self.depth_bound.d {
            Some(d) => d,
            None => {
                let s = self.compared_register_width.max(1);
                let log = (s.next_power_of_two().trailing_zeros()) as usize;
                self.depth_bound.a * log + self.depth_bound.b
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }
}

fn manifest_registers(c: &Circuit) -> Vec<ManifestRegister> {
    c.layout()
        .registers
        .iter()
        .map(|r| ManifestRegister {
            name: r.name.clone(),
            role: r.role.to_string(),
            qubits: r.qubits.iter().map(|q| q.0).collect(),
        })
        .collect()
}

/// Build the constructed pair (C₁, C₂) for a close-images instance.
pub fn build_log_depth_ci(
    instance: &CIInstance,
    opts: &ReductionOptions,
) -> Result<(Circuit, Circuit, ConstructionManifest)> {
    if opts.repetitions < 1 {
        return Err(Error::InvalidInstance("repetitions must be >= 1".into()));
    }
    let mut p1 = slice(&instance.q1)?;
    let mut p2 = slice(&instance.q2)?;
    let n = p1.len().max(p2.len());
    pad_pieces(&mut p1, n);
    pad_pieces(&mut p2, n);

    let (c1, s1) = build_side(&p1, &instance.q1, opts.use_fanout, true)?;
    let (c2, s2) = build_side(&p2, &instance.q2, opts.use_fanout, false)?;
    let compared = p1[0].width().max(p2[0].width());

    let (c1, c2) = if opts.repetitions > 1 {
        amplify(&c1, &c2, opts.repetitions)?
    } else {
        (c1, c2)
    };

    let manifest = ConstructionManifest {
        n,
        registers: ManifestRegisters {
            c1: manifest_registers(&c1),
            c2: manifest_registers(&c2),
        },
        depth_bound: DepthBound {
            a: DEPTH_LOG_COEFF,
            b: DEPTH_LOG_OFFSET,
            d: opts.use_fanout.then_some(DEPTH_FANOUT_CONST),
        },
        repetitions: opts.repetitions,
        use_fanout: opts.use_fanout,
        trivial: n == 1,
        compared_register_width: compared,
        c1_structure: s1,
        c2_structure: s2,
    };
    Ok((c1, c2, manifest))
}

/// Parallel repetition: r copies of each circuit side by side. The maximum
/// output fidelity of the pair is raised to the r-th power; depth is
/// unchanged.
pub fn amplify(c1: &Circuit, c2: &Circuit, r: usize) -> Result<(Circuit, Circuit)> {
    if r < 1 {
        return Err(Error::InvalidInstance("repetitions must be >= 1".into()));
    }
    if r == 1 {
        return Ok((c1.clone(), c2.clone()));
    }
    let copies1: Vec<Circuit> = (0..r).map(|_| c1.clone()).collect();
    let copies2: Vec<Circuit> = (0..r).map(|_| c2.clone()).collect();
    Ok((tensor_parallel(&copies1), tensor_parallel(&copies2)))
}

/// Emit one controlled swap test. The selection control conditions only the
/// two H gates on the result qubit: with the control off the result qubit
/// stays |0⟩ and none of the carrier-controlled SWAP2 gates fire, so the
/// registers pass through untouched.
fn emit_controlled_swap_test(
    gates: &mut Vec<Gate>,
    ctrl: QubitRef,
    result: QubitRef,
    copies: &[QubitRef],
    left: &[QubitRef],
    right: &[QubitRef],
    use_fanout: bool,
) {
    debug_assert_eq!(left.len(), right.len());
    let mut carriers = vec![result];
    carriers.extend(copies.iter().copied());
    debug_assert_eq!(carriers.len(), left.len());

    gates.push(Gate::new(crate::ir::GateKind::H, vec![result]).with_controls(vec![ctrl]));
    let expansion = expansion_gates(&carriers, use_fanout);
    gates.extend(expansion.iter().cloned());
    for p in 0..left.len() {
        gates.push(Gate::swap2(left[p].0, right[p].0).with_controls(vec![carriers[p]]));
    }
    gates.extend(expansion.into_iter().rev());
    gates.push(Gate::new(crate::ir::GateKind::H, vec![result]).with_controls(vec![ctrl]));
}

/// Diagnostic rewrites of a constructed circuit's boundary machinery.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TestSelection {
    /// Only the first test of every boundary, performed unconditionally.
    FirstOnly,
    /// Only the second test of every boundary, performed unconditionally.
    SecondOnly,
    /// No tests at all: the blocks simply run in parallel.
    Disabled,
}

/// Rewrite a constructed circuit per `selection`, keeping its width, wire
/// roles, and output registers. Skipped tests leave their result qubits
/// untouched at |0⟩. The even mixture of the `FirstOnly` and `SecondOnly`
/// channels equals the coherent-control construction's channel, which the
/// harness asserts as the classical-coin equivalence; `Disabled` exposes the
/// bare parallel slicing for faithfulness checks.
pub fn selection_variant(
    circuit: &Circuit,
    structure: &SideStructure,
    selection: TestSelection,
) -> Circuit {
    let mut drop = std::collections::BTreeSet::new();
    let mut strip_ctrl = std::collections::BTreeSet::new();
    for b in &structure.boundaries {
        drop.insert(b.h_ctrl);
        drop.insert(b.x_ctrl);
        let (kept, removed): (&[usize], &[usize]) = match selection {
            TestSelection::FirstOnly => (&b.test1, &b.test2),
            TestSelection::SecondOnly => (&b.test2, &b.test1),
            TestSelection::Disabled => (&[], &b.test1),
        };
        if selection == TestSelection::Disabled {
            drop.extend(b.test1.iter().copied());
            drop.extend(b.test2.iter().copied());
        } else {
            drop.extend(removed.iter().copied());
            strip_ctrl.extend(kept.iter().copied());
        }
    }
    let ctrls: std::collections::BTreeSet<usize> = structure.ctrls.iter().map(|q| q.0).collect();
    let gates = circuit
        .gates()
        .iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(i, g)| {
            if strip_ctrl.contains(&i) {
                let mut g = g.clone();
                g.controls.retain(|q| !ctrls.contains(&q.0));
                g
            } else {
                g.clone()
            }
        })
        .collect();
    Circuit::new(
        circuit.width(),
        circuit.inputs().to_vec(),
        circuit.ancillas().to_vec(),
        gates,
        circuit.traced().to_vec(),
        circuit.outputs().to_vec(),
        circuit.layout().clone(),
    )
}

fn build_side(
    pieces: &[Circuit],
    original: &Circuit,
    use_fanout: bool,
    tests_first: bool,
) -> Result<(Circuit, SideStructure)> {
    let n = pieces.len();
    let w = pieces[0].width();
    let nb = n - 1;
    let copies_per = w - 1;

    let block_wires = |j: usize| -> Vec<QubitRef> { (j * w..(j + 1) * w).map(QubitRef).collect() };
    let aux_base = n * w;
    let aux_wires =
        |j: usize| -> Vec<QubitRef> { (aux_base + j * w..aux_base + (j + 1) * w).map(QubitRef).collect() };
    let ctrl_base = aux_base + nb * w;
    let ctrl = |j: usize| QubitRef(ctrl_base + j);
    let test_base = ctrl_base + nb;
    let test1 = |j: usize| QubitRef(test_base + 2 * j);
    let test2 = |j: usize| QubitRef(test_base + 2 * j + 1);
    let copy_base = test_base + 2 * nb;
    let copy_wires = |j: usize| -> Vec<QubitRef> {
        (copy_base + j * copies_per..copy_base + (j + 1) * copies_per)
            .map(QubitRef)
            .collect()
    };
    let dummy_base = copy_base + nb * copies_per;
    let dummies: Vec<QubitRef> = (dummy_base..dummy_base + 2 * nb).map(QubitRef).collect();
    let width = dummy_base + 2 * nb;

    // gate emission: control preparation, first tests, control flips,
    // pieces, second tests — greedy packing interleaves them
    let mut gates: Vec<Gate> = Vec::new();
    let mut boundaries: Vec<BoundaryGates> = Vec::with_capacity(nb);
    for j in 0..nb {
        boundaries.push(BoundaryGates {
            h_ctrl: gates.len(),
            ..BoundaryGates::default()
        });
        gates.push(Gate::h(ctrl(j).0));
    }
    for j in 0..nb {
        let start = gates.len();
        emit_controlled_swap_test(
            &mut gates,
            ctrl(j),
            test1(j),
            &copy_wires(j),
            &aux_wires(j),
            &block_wires(j + 1),
            use_fanout,
        );
        boundaries[j].test1 = (start..gates.len()).collect();
    }
    for j in 0..nb {
        boundaries[j].x_ctrl = gates.len();
        gates.push(Gate::x(ctrl(j).0));
    }
    let mut piece_gates: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (j, piece) in pieces.iter().enumerate() {
        for gate in piece.gates() {
            piece_gates[j].push(gates.len());
            gates.push(gate.shifted(j * w));
        }
    }
    for j in 0..nb {
        let start = gates.len();
        emit_controlled_swap_test(
            &mut gates,
            ctrl(j),
            test2(j),
            &copy_wires(j),
            &aux_wires(j),
            &block_wires(j),
            use_fanout,
        );
        boundaries[j].test2 = (start..gates.len()).collect();
    }

    // wire roles
    let block0_h: Vec<QubitRef> = pieces[0].inputs().to_vec();
    let block0_a: Vec<QubitRef> = pieces[0].ancillas().to_vec();
    let mut inputs = block0_h.clone();
    let mut block_inputs = vec![block0_h.clone()];
    for j in 1..n {
        inputs.extend(block_wires(j));
        block_inputs.push(block_wires(j));
    }
    for j in 0..nb {
        inputs.extend(aux_wires(j));
    }
    let mut ancillas = block0_a.clone();
    ancillas.extend((0..nb).map(ctrl));
    for j in 0..nb {
        ancillas.push(test1(j));
        ancillas.push(test2(j));
    }
    for j in 0..nb {
        ancillas.extend(copy_wires(j));
    }
    ancillas.extend(dummies.iter().copied());

    let last = n - 1;
    let k_out: Vec<QubitRef> = original.outputs().iter().map(|q| QubitRef(q.0 + last * w)).collect();
    let b_traced: Vec<QubitRef> = original.traced().iter().map(|q| QubitRef(q.0 + last * w)).collect();
    let mut test_outs = Vec::with_capacity(2 * nb);
    for j in 0..nb {
        test_outs.push(test1(j));
        test_outs.push(test2(j));
    }
    let mut outputs = k_out.clone();
    if tests_first {
        outputs.extend(test_outs.iter().copied());
        outputs.extend(dummies.iter().copied());
    } else {
        outputs.extend(dummies.iter().copied());
        outputs.extend(test_outs.iter().copied());
    }
    let traced = complement(width, &outputs);

    // layout
    let mut registers = Vec::new();
    registers.push(Register::new("h1", Role::H(1), block0_h));
    if !block0_a.is_empty() {
        registers.push(Register::new("a1", Role::A(1), block0_a));
    }
    for j in 1..n {
        let idx = (j + 1) as u32;
        registers.push(Register::new(format!("h{}", j + 1), Role::H(idx), block_wires(j)));
    }
    for j in 0..nb {
        let idx = (j + 1) as u32;
        registers.push(Register::new(format!("aux{}", j + 1), Role::Aux(idx), aux_wires(j)));
        registers.push(Register::new(format!("ctrl{}", j + 1), Role::Ctrl(idx), vec![ctrl(j)]));
        registers.push(Register::new(
            format!("test{}", j + 1),
            Role::Test(idx),
            vec![test1(j), test2(j)],
        ));
        if copies_per > 0 {
            registers.push(Register::new(
                format!("copy{}", j + 1),
                Role::Copy(idx),
                copy_wires(j),
            ));
        }
        registers.push(Register::new(
            format!("dummy{}", j + 1),
            Role::Dummy(idx),
            vec![dummies[2 * j], dummies[2 * j + 1]],
        ));
    }
    if !b_traced.is_empty() {
        registers.push(Register::new("bn", Role::B(n as u32), b_traced));
    }
    registers.push(Register::new("kn", Role::K(n as u32), k_out.clone()));

    let circuit = Circuit::new(
        width,
        inputs,
        ancillas,
        gates,
        traced,
        outputs,
        RegisterLayout::new(registers),
    )
    .validated()?;

    let structure = SideStructure {
        n,
        block_width: w,
        blocks: (0..n).map(block_wires).collect(),
        block_inputs,
        aux: (0..nb).map(aux_wires).collect(),
        ctrls: (0..nb).map(ctrl).collect(),
        tests: (0..nb).map(|j| (test1(j), test2(j))).collect(),
        copies: (0..nb).map(copy_wires).collect(),
        dummies,
        k_out,
        boundaries,
        piece_gates,
    };
    Ok((circuit, structure))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::{depth, CostModel};

    fn small_instance() -> CIInstance {
        // single-qubit H then X, same circuit on both sides
        let q = Circuit::unitary(1, vec![Gate::h(0), Gate::x(0)]);
        CIInstance::new(q.clone(), q, 1.0, 0.5).unwrap()
    }

    #[test]
    fn two_block_construction_has_expected_shape() {
        let (c1, c2, manifest) =
            build_log_depth_ci(&small_instance(), &ReductionOptions::default()).unwrap();
        assert_eq!(manifest.n, 2);
        assert!(!manifest.trivial);
        // output register: 1 (K) + 2 tests + 2 dummies
        assert_eq!(c1.outputs().len(), 5);
        assert_eq!(c2.outputs().len(), 5);
        assert!(c1.validate().is_well_formed());
        assert!(c2.validate().is_well_formed());
        // C1 pairs its tests against C2's dummies and vice versa
        let s1 = &manifest.c1_structure;
        let s2 = &manifest.c2_structure;
        assert_eq!(c1.outputs()[1], s1.tests[0].0);
        assert_eq!(c2.outputs()[1], s2.dummies[0]);
        assert_eq!(c2.outputs()[3], s2.tests[0].0);
    }

    #[test]
    fn depth_respects_recorded_bound() {
        for (gates, width) in [(2usize, 1usize), (4, 2), (6, 3)] {
            let mut gs = Vec::new();
            for i in 0..gates {
                gs.push(if width > 1 {
                    Gate::cnot(i % width, (i + 1) % width)
                } else {
                    Gate::h(0)
                });
            }
            let q = Circuit::unitary(width, gs);
            let instance = CIInstance::new(q.clone(), q, 1.0, 0.5).unwrap();

            let (c1, _, manifest) =
                build_log_depth_ci(&instance, &ReductionOptions::default()).unwrap();
            let d = depth(&c1, CostModel::FANOUT_TREE).unwrap().layer_count;
            assert!(
                d <= manifest.depth_limit(),
                "depth {d} > {} for width {width}",
                manifest.depth_limit()
            );

            let opts = ReductionOptions {
                use_fanout: true,
                ..ReductionOptions::default()
            };
            let (c1f, _, mf) = build_log_depth_ci(&instance, &opts).unwrap();
            let df = depth(&c1f, CostModel::FANOUT_FREE).unwrap().layer_count;
            assert!(df <= mf.depth_limit(), "fanout depth {df} > {}", mf.depth_limit());
        }
    }

    #[test]
    fn trivial_single_gate_instance_is_flagged() {
        let q = Circuit::unitary(1, vec![Gate::h(0)]);
        let instance = CIInstance::new(q.clone(), q, 1.0, 0.5).unwrap();
        let (c1, _, manifest) =
            build_log_depth_ci(&instance, &ReductionOptions::default()).unwrap();
        assert!(manifest.trivial);
        assert_eq!(manifest.n, 1);
        assert_eq!(c1.outputs().len(), 1);
        assert!(manifest.c1_structure.tests.is_empty());
    }

    #[test]
    fn padding_equalizes_gate_counts() {
        let q1 = Circuit::unitary(1, vec![Gate::h(0)]);
        let q2 = Circuit::unitary(1, vec![Gate::h(0), Gate::x(0), Gate::z(0)]);
        let instance = CIInstance::new(q1, q2, 1.0, 0.5).unwrap();
        let (c1, c2, manifest) =
            build_log_depth_ci(&instance, &ReductionOptions::default()).unwrap();
        assert_eq!(manifest.n, 3);
        assert_eq!(c1.width(), c2.width());
    }

    #[test]
    fn amplification_keeps_depth_and_multiplies_width() {
        let (c1, c2, _) = build_log_depth_ci(&small_instance(), &ReductionOptions::default()).unwrap();
        let d0 = depth(&c1, CostModel::default()).unwrap().layer_count;
        for r in [2usize, 4] {
            let (a1, a2) = amplify(&c1, &c2, r).unwrap();
            assert_eq!(a1.width(), r * c1.width());
            assert_eq!(a2.width(), r * c2.width());
            assert_eq!(depth(&a1, CostModel::default()).unwrap().layer_count, d0);
        }
        let (a1, _) = amplify(&c1, &c2, 1).unwrap();
        assert_eq!(a1, c1);
    }

    #[test]
    fn thresholds_are_validated() {
        let q = Circuit::unitary(1, vec![Gate::h(0)]);
        assert!(CIInstance::new(q.clone(), q.clone(), 0.5, 0.9).is_err());
        assert!(QCDInstance::new(q.clone(), q, 2.0, 0.1).is_ok());
    }

    #[test]
    fn manifest_serializes_expected_fields() {
        let (_, _, manifest) =
            build_log_depth_ci(&small_instance(), &ReductionOptions::default()).unwrap();
        let json = manifest.to_json();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["n"], 2);
        assert!(value["registers"]["c1"].is_array());
        assert_eq!(value["depth_bound"]["a"], 4);
        assert_eq!(value["repetitions"], 1);
    }
}
