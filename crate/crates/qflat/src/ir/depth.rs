//! Depth accounting by greedy earliest-layer packing.
//!
//! Each gate is placed on the earliest layer after every earlier gate that
//! shares a wire with it. This is deterministic in program order, and is the
//! depth definition used everywhere in the crate.

use crate::ir::{Circuit, GateKind};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CostModel {
    /// When set, a FANOUT counts as one layer regardless of its target count;
    /// otherwise it is charged its CNOT-tree depth ⌈log₂(k+1)⌉.
    pub fanout_unit_cost: bool,
}

impl CostModel {
    pub const FANOUT_FREE: CostModel = CostModel { fanout_unit_cost: true };
    pub const FANOUT_TREE: CostModel = CostModel { fanout_unit_cost: false };

    fn gate_cost(&self, kind: GateKind) -> usize {
        match kind {
            GateKind::Fanout { targets } if !self.fanout_unit_cost => {
                (targets + 1).next_power_of_two().trailing_zeros() as usize
            }
            _ => 1,
        }
    }
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel::FANOUT_FREE
    }
}

#[derive(Clone, Debug)]
pub struct DepthReport {
    pub layer_count: usize,
    pub gate_count: usize,
    pub cost_model: CostModel,
    /// Completion layer per named register: the last layer on which any of
    /// the register's wires is busy.
    pub per_register: Vec<(String, usize)>,
}

/// Greedy left-packed depth of a circuit under the given cost model.
pub fn depth(circuit: &Circuit, cost_model: CostModel) -> crate::Result<DepthReport> {
    let circuit = circuit.clone().validated()?;
    let mut wire_time = vec![0usize; circuit.width()];
    for gate in circuit.gates() {
        let cost = cost_model.gate_cost(gate.kind);
        let start = gate.support().map(|q| wire_time[q.0]).max().unwrap_or(0);
        for q in gate.support() {
            wire_time[q.0] = start + cost;
        }
    }
    let layer_count = wire_time.iter().copied().max().unwrap_or(0);
    let per_register = circuit
        .layout()
        .registers
        .iter()
        .map(|r| {
            let t = r.qubits.iter().map(|q| wire_time[q.0]).max().unwrap_or(0);
            (r.name.clone(), t)
        })
        .collect();
    Ok(DepthReport {
        layer_count,
        gate_count: circuit.gate_count(),
        cost_model,
        per_register,
    })
}

/// The greedy packing itself: gate indices grouped by layer, unit costs.
pub fn layers(circuit: &Circuit) -> Vec<Vec<usize>> {
    let mut wire_time = vec![0usize; circuit.width()];
    let mut packed: Vec<Vec<usize>> = Vec::new();
    for (i, gate) in circuit.gates().iter().enumerate() {
        let start = gate.support().map(|q| wire_time[q.0]).max().unwrap_or(0);
        for q in gate.support() {
            wire_time[q.0] = start + 1;
        }
        if packed.len() <= start {
            packed.resize_with(start + 1, Vec::new);
        }
        packed[start].push(i);
    }
    packed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::Gate;

    #[test]
    fn single_gate_is_one_layer() {
        let c = Circuit::unitary(1, vec![Gate::h(0)]);
        let report = depth(&c, CostModel::default()).unwrap();
        assert_eq!(report.layer_count, 1);
        assert_eq!(report.gate_count, 1);
    }

    #[test]
    fn sequential_dependency_is_not_packed() {
        let c = Circuit::unitary(
            2,
            vec![Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::cnot(0, 1)],
        );
        assert_eq!(depth(&c, CostModel::default()).unwrap().layer_count, 3);
    }

    #[test]
    fn disjoint_gates_pack_into_one_layer() {
        let gates = (0..8).map(Gate::h).collect();
        let c = Circuit::unitary(8, gates);
        assert_eq!(depth(&c, CostModel::default()).unwrap().layer_count, 1);
    }

    #[test]
    fn fanout_cost_models() {
        let c = Circuit::unitary(8, vec![Gate::fanout(0, &[1, 2, 3, 4, 5, 6, 7])]);
        assert_eq!(depth(&c, CostModel::FANOUT_FREE).unwrap().layer_count, 1);
        // 8 carriers: three doubling rounds
        assert_eq!(depth(&c, CostModel::FANOUT_TREE).unwrap().layer_count, 3);
    }

    #[test]
    fn empty_circuit_has_zero_layers() {
        let c = Circuit::unitary(3, vec![]);
        assert_eq!(depth(&c, CostModel::default()).unwrap().layer_count, 0);
    }

    #[test]
    fn packing_respects_dependencies() {
        // H(0), CNOT(0,1), H(2): H(2) packs into layer 0, CNOT waits for H(0)
        let c = Circuit::unitary(3, vec![Gate::h(0), Gate::cnot(0, 1), Gate::h(2)]);
        let packed = layers(&c);
        assert_eq!(packed.len(), 2);
        assert_eq!(packed[0], vec![0, 2]);
        assert_eq!(packed[1], vec![1]);
    }
}
