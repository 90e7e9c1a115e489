//! The circuit type and its validator.
//!
//! Circuits are in normalized form: every ancilla is prepared |0⟩ before any
//! gate, all gates are unitary, and the trace-out of unwanted wires happens
//! once at the very end. Measurement is not represented; result wires are
//! simply designated outputs and the simulator measures them.

use std::collections::BTreeSet;
use std::fmt;

use crate::ir::{Gate, GateKind, QubitRef, Register, RegisterLayout, Role};

#[derive(Clone, Debug)]
pub struct Circuit {
    width: usize,
    /// Wires the circuit reads; order fixes the input state's qubit order.
    inputs: Vec<QubitRef>,
    /// Wires prepared |0⟩ at the start.
    ancillas: Vec<QubitRef>,
    /// Program order. Layering is recomputed, never stored.
    gates: Vec<Gate>,
    /// Wires discarded at the end.
    traced: Vec<QubitRef>,
    /// Wires kept; order fixes the output state's qubit order.
    outputs: Vec<QubitRef>,
    layout: RegisterLayout,
    /// Gate indices at which each ancilla is introduced. Normalized circuits
    /// have all introductions at 0 and leave this empty; the validator flags
    /// anything else.
    deferred_prep: Vec<(QubitRef, usize)>,
    /// Explicit layer sizes when the circuit was built layer by layer; kept
    /// only so the validator can detect overlapping layers.
    layer_marks: Option<Vec<usize>>,
}

impl PartialEq for Circuit {
    fn eq(&self, other: &Self) -> bool {
        // layer marks are construction metadata, not structure
        self.width == other.width
            && self.inputs == other.inputs
            && self.ancillas == other.ancillas
            && self.gates == other.gates
            && self.traced == other.traced
            && self.outputs == other.outputs
            && self.layout == other.layout
            && self.deferred_prep == other.deferred_prep
    }
}

impl Circuit {
    pub fn new(
        width: usize,
        inputs: Vec<QubitRef>,
        ancillas: Vec<QubitRef>,
        gates: Vec<Gate>,
        traced: Vec<QubitRef>,
        outputs: Vec<QubitRef>,
        layout: RegisterLayout,
    ) -> Self {
        Circuit {
            width,
            inputs,
            ancillas,
            gates,
            traced,
            outputs,
            layout,
            deferred_prep: Vec::new(),
            layer_marks: None,
        }
    }

    /// A purely unitary circuit: every wire is both input and output.
    pub fn unitary(width: usize, gates: Vec<Gate>) -> Self {
        let all: Vec<QubitRef> = (0..width).map(QubitRef).collect();
        let layout = RegisterLayout::plain(&all, &[]);
        Circuit::new(width, all.clone(), Vec::new(), gates, Vec::new(), all, layout)
    }

    /// Channel form with contiguous registers: inputs `[0, input_count)`,
    /// ancillas the rest, explicit traced/output split.
    pub fn channel(
        width: usize,
        input_count: usize,
        gates: Vec<Gate>,
        traced: Vec<QubitRef>,
        outputs: Vec<QubitRef>,
    ) -> Self {
        let inputs: Vec<QubitRef> = (0..input_count).map(QubitRef).collect();
        let ancillas: Vec<QubitRef> = (input_count..width).map(QubitRef).collect();
        let layout = RegisterLayout::plain(&inputs, &ancillas);
        Circuit::new(width, inputs, ancillas, gates, traced, outputs, layout)
    }

    /// Build from explicit layers; the validator checks each layer for
    /// overlapping supports.
    pub fn from_layers(
        width: usize,
        inputs: Vec<QubitRef>,
        ancillas: Vec<QubitRef>,
        layers: Vec<Vec<Gate>>,
        traced: Vec<QubitRef>,
        outputs: Vec<QubitRef>,
        layout: RegisterLayout,
    ) -> Self {
        let marks = layers.iter().map(Vec::len).collect();
        let gates = layers.into_iter().flatten().collect();
        let mut c = Circuit::new(width, inputs, ancillas, gates, traced, outputs, layout);
        c.layer_marks = Some(marks);
        c
    }

    pub fn width(&self) -> usize {
        self.width
    }
    pub fn inputs(&self) -> &[QubitRef] {
        &self.inputs
    }
    pub fn ancillas(&self) -> &[QubitRef] {
        &self.ancillas
    }
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }
    pub fn traced(&self) -> &[QubitRef] {
        &self.traced
    }
    pub fn outputs(&self) -> &[QubitRef] {
        &self.outputs
    }
    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }
    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    pub fn input_dim(&self) -> usize {
        1usize << self.inputs.len()
    }
    pub fn output_dim(&self) -> usize {
        1usize << self.outputs.len()
    }

    pub fn set_layout(&mut self, layout: RegisterLayout) {
        self.layout = layout;
    }

    pub fn push_gate(&mut self, gate: Gate) {
        self.layer_marks = None;
        self.gates.push(gate);
    }

    /// Mark an ancilla as introduced just before gate `gate_index` instead of
    /// at the start. Only the validator cares; everything else requires
    /// normalized circuits.
    pub fn defer_prep(&mut self, qubit: QubitRef, gate_index: usize) {
        self.deferred_prep.push((qubit, gate_index));
    }

    pub fn is_normalized(&self) -> bool {
        self.deferred_prep.iter().all(|&(_, at)| at == 0)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        self.check_partition(&mut report, &self.inputs, &self.ancillas, Section::Start);
        self.check_partition(&mut report, &self.traced, &self.outputs, Section::End);
        self.check_gates(&mut report);
        self.check_prep_order(&mut report);
        self.check_layers(&mut report);
        self.check_layout(&mut report);
        report
    }

    pub fn validated(self) -> crate::Result<Self> {
        let report = self.validate();
        if report.is_well_formed() {
            Ok(self)
        } else {
            Err(crate::Error::Invalid(report))
        }
    }

    fn check_partition(
        &self,
        report: &mut ValidationReport,
        left: &[QubitRef],
        right: &[QubitRef],
        section: Section,
    ) {
        let mut seen = vec![0u32; self.width];
        let mut out_of_range = false;
        for q in left.iter().chain(right) {
            if q.0 >= self.width {
                out_of_range = true;
            } else {
                seen[q.0] += 1;
            }
        }
        let ok = !out_of_range && seen.iter().all(|&c| c == 1);
        if !ok {
            report.push(match section {
                Section::Start => Violation::InputAncillaPartition {
                    width: self.width,
                    inputs: left.len(),
                    ancillas: right.len(),
                },
                Section::End => Violation::TracedOutputPartition {
                    width: self.width,
                    traced: left.len(),
                    outputs: right.len(),
                },
            });
        }
    }

    fn check_gates(&self, report: &mut ValidationReport) {
        for (i, gate) in self.gates.iter().enumerate() {
            if gate.operands.len() != gate.kind.arity() {
                report.push(Violation::GateArity {
                    gate: i,
                    kind: gate.kind.name(),
                    expected: gate.kind.arity(),
                    found: gate.operands.len(),
                });
            }
            if let GateKind::Fanout { targets } = gate.kind {
                if targets == 0 {
                    report.push(Violation::GateArity {
                        gate: i,
                        kind: "FANOUT",
                        expected: 2,
                        found: 1,
                    });
                }
            }
            for q in gate.support() {
                if q.0 >= self.width {
                    report.push(Violation::OutOfRangeOperand { gate: i, qubit: q.0 });
                }
            }
            let mut seen = BTreeSet::new();
            for q in gate.support() {
                if !seen.insert(q.0) {
                    report.push(Violation::RepeatedQubit { gate: i, qubit: q.0 });
                }
            }
        }
    }

    fn check_prep_order(&self, report: &mut ValidationReport) {
        let ancillas: BTreeSet<usize> = self.ancillas.iter().map(|q| q.0).collect();
        for &(q, at) in &self.deferred_prep {
            if !ancillas.contains(&q.0) {
                report.push(Violation::OutOfRangeOperand { gate: at, qubit: q.0 });
            } else if at > 0 {
                report.push(Violation::NonNormalizedPrepOrder { qubit: q.0, gate: at });
            }
        }
    }

    fn check_layers(&self, report: &mut ValidationReport) {
        let Some(marks) = &self.layer_marks else {
            return;
        };
        let mut idx = 0usize;
        for (layer, &len) in marks.iter().enumerate() {
            let mut used = BTreeSet::new();
            for gate in &self.gates[idx..idx + len] {
                for q in gate.support() {
                    if q.0 < self.width && !used.insert(q.0) {
                        report.push(Violation::OverlappingLayers { layer, qubit: q.0 });
                    }
                }
            }
            idx += len;
        }
    }

    fn check_layout(&self, report: &mut ValidationReport) {
        if self.layout.is_empty() {
            return;
        }
        let mut start_cover = vec![0u32; self.width];
        let mut end_cover = vec![0u32; self.width];
        for reg in &self.layout.registers {
            let cover = if reg.role.is_start_family() {
                &mut start_cover
            } else {
                &mut end_cover
            };
            for q in &reg.qubits {
                if q.0 >= self.width {
                    report.push(Violation::RegisterOutOfRange {
                        register: reg.name.clone(),
                        qubit: q.0,
                    });
                } else {
                    cover[q.0] += 1;
                }
            }
        }
        if start_cover.iter().any(|&c| c > 1) || end_cover.iter().any(|&c| c > 1) {
            report.push(Violation::OverlappingRegisters);
        }
        if start_cover.iter().any(|&c| c == 0) {
            report.push(Violation::RegisterCoverageGap);
        }

        // input wires must be exactly the H/AUX registers
        let declared: BTreeSet<usize> = self
            .layout
            .registers
            .iter()
            .filter(|r| r.role.is_input())
            .flat_map(|r| r.qubits.iter().map(|q| q.0))
            .collect();
        let inputs: BTreeSet<usize> = self.inputs.iter().map(|q| q.0).collect();
        if declared != inputs {
            report.push(Violation::InputRegisterMismatch);
        }

        // H_i ⊗ A_i and B_i ⊗ K_i are isomorphic blockwise
        for block in 1..=self.layout.max_block() {
            let size = |role: Role| self.layout.find(role).map_or(0, |r| r.qubits.len());
            let start = size(Role::H(block)) + size(Role::A(block));
            let end = size(Role::B(block)) + size(Role::K(block));
            if start > 0 && end > 0 && start != end {
                report.push(Violation::BlockSizeMismatch { block, start, end });
            }
        }
    }

    /// The register layout role lookup, for construction consumers.
    pub fn register(&self, role: Role) -> Option<&Register> {
        self.layout.find(role)
    }
}

enum Section {
    Start,
    End,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    OutOfRangeOperand { gate: usize, qubit: usize },
    RepeatedQubit { gate: usize, qubit: usize },
    GateArity { gate: usize, kind: &'static str, expected: usize, found: usize },
    InputAncillaPartition { width: usize, inputs: usize, ancillas: usize },
    TracedOutputPartition { width: usize, traced: usize, outputs: usize },
    NonNormalizedPrepOrder { qubit: usize, gate: usize },
    OverlappingLayers { layer: usize, qubit: usize },
    OverlappingRegisters,
    RegisterCoverageGap,
    RegisterOutOfRange { register: String, qubit: usize },
    InputRegisterMismatch,
    BlockSizeMismatch { block: u32, start: usize, end: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRangeOperand { gate, qubit } => {
                write!(f, "out-of-range operand: gate {gate} references qubit {qubit}")
            }
            Violation::RepeatedQubit { gate, qubit } => {
                write!(f, "gate {gate} uses qubit {qubit} more than once")
            }
            Violation::GateArity { gate, kind, expected, found } => write!(
                f,
                "gate {gate} ({kind}) has {found} operands, expected {expected}"
            ),
            Violation::InputAncillaPartition { width, inputs, ancillas } => write!(
                f,
                "inputs ({inputs}) and ancillas ({ancillas}) do not partition width {width}"
            ),
            Violation::TracedOutputPartition { width, traced, outputs } => write!(
                f,
                "traced ({traced}) and outputs ({outputs}) do not partition width {width}"
            ),
            Violation::NonNormalizedPrepOrder { qubit, gate } => write!(
                f,
                "non-normalized prep order: ancilla {qubit} introduced at gate {gate}"
            ),
            Violation::OverlappingLayers { layer, qubit } => {
                write!(f, "overlapping layers: layer {layer} touches qubit {qubit} twice")
            }
            Violation::OverlappingRegisters => write!(f, "overlapping registers"),
            Violation::RegisterCoverageGap => {
                write!(f, "start-of-circuit registers do not cover the width")
            }
            Violation::RegisterOutOfRange { register, qubit } => {
                write!(f, "register `{register}` references qubit {qubit} outside the width")
            }
            Violation::InputRegisterMismatch => {
                write!(f, "input wires disagree with the H/AUX registers")
            }
            Violation::BlockSizeMismatch { block, start, end } => write!(
                f,
                "block {block}: start registers span {start} wires but end registers span {end}"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn is_well_formed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "well-formed")
        } else {
            for v in &self.violations {
                writeln!(f, "- {v}")?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_width_one_circuit_is_well_formed() {
        let c = Circuit::unitary(1, vec![]);
        assert!(c.validate().is_well_formed());
        assert_eq!(c.gate_count(), 0);
    }

    #[test]
    fn out_of_range_operand_is_reported() {
        let c = Circuit::unitary(2, vec![Gate::h(2)]);
        let report = c.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::OutOfRangeOperand { qubit: 2, .. })));
    }

    #[test]
    fn deferred_prep_is_flagged() {
        let mut c = Circuit::channel(2, 1, vec![Gate::h(0)], vec![], vec![QubitRef(0), QubitRef(1)]);
        assert!(c.validate().is_well_formed());
        c.defer_prep(QubitRef(1), 1);
        let report = c.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::NonNormalizedPrepOrder { qubit: 1, gate: 1 })));
        assert!(!c.is_normalized());
    }

    #[test]
    fn overlapping_explicit_layers_are_reported() {
        let all = vec![QubitRef(0), QubitRef(1)];
        let layout = RegisterLayout::plain(&all, &[]);
        let c = Circuit::from_layers(
            2,
            all.clone(),
            vec![],
            vec![vec![Gate::h(0), Gate::x(0)]],
            vec![],
            all,
            layout,
        );
        let report = c.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::OverlappingLayers { layer: 0, qubit: 0 })));
    }

    #[test]
    fn duplicate_register_qubits_are_reported() {
        let mut c = Circuit::unitary(2, vec![]);
        c.set_layout(RegisterLayout::new(vec![
            Register::new("x", Role::H(1), vec![QubitRef(0), QubitRef(1)]),
            Register::new("y", Role::A(1), vec![QubitRef(1)]),
        ]));
        let report = c.validate();
        assert!(report.violations.contains(&Violation::OverlappingRegisters));
    }

    #[test]
    fn control_collision_is_repeated_qubit() {
        let g = Gate::h(0).with_controls(vec![QubitRef(0)]);
        let c = Circuit::unitary(1, vec![g]);
        assert!(c
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, Violation::RepeatedQubit { qubit: 0, .. })));
    }
}
