//! Circuit serialization.
//!
//! A circuit document is UTF-8 JSON with fields `version` (= 1), `width`,
//! `registers` (name / role / qubits), `gates` (program order; `k` present
//! only on FANOUT), `traced`, and `outputs`. Input and ancilla wires are
//! derived from the register roles; layering is recomputed on load.

use serde::{Deserialize, Serialize};

use crate::ir::{Circuit, Gate, GateKind, QubitRef, Register, RegisterLayout, Role};
use crate::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CircuitDoc {
    version: u32,
    width: usize,
    registers: Vec<RegisterDoc>,
    gates: Vec<GateDoc>,
    traced: Vec<usize>,
    outputs: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RegisterDoc {
    name: String,
    role: String,
    qubits: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GateDoc {
    kind: String,
    operands: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    controls: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
}

pub fn write_circuit(circuit: &Circuit) -> Result<String> {
    if !circuit.is_normalized() {
        return Err(Error::NonNormalized);
    }
    let report = circuit.validate();
    if !report.is_well_formed() {
        return Err(Error::Invalid(report));
    }
    let doc = CircuitDoc {
        version: FORMAT_VERSION,
        width: circuit.width(),
        registers: circuit
            .layout()
            .registers
            .iter()
            .map(|r| RegisterDoc {
                name: r.name.clone(),
                role: r.role.to_string(),
                qubits: r.qubits.iter().map(|q| q.0).collect(),
            })
            .collect(),
        gates: circuit.gates().iter().map(gate_doc).collect(),
        traced: circuit.traced().iter().map(|q| q.0).collect(),
        outputs: circuit.outputs().iter().map(|q| q.0).collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

fn gate_doc(gate: &Gate) -> GateDoc {
    GateDoc {
        kind: gate.kind.name().to_string(),
        operands: gate.operands.iter().map(|q| q.0).collect(),
        controls: gate.controls.iter().map(|q| q.0).collect(),
        k: match gate.kind {
            GateKind::Fanout { targets } => Some(targets),
            _ => None,
        },
    }
}

pub fn read_circuit(text: &str) -> Result<Circuit> {
    let doc: CircuitDoc = serde_json::from_str(text)?;
    if doc.version != FORMAT_VERSION {
        return Err(Error::Version {
            found: doc.version,
            expected: FORMAT_VERSION,
        });
    }
    let mut registers = Vec::with_capacity(doc.registers.len());
    for r in &doc.registers {
        let role: Role = r.role.parse().map_err(Error::Parse)?;
        registers.push(Register::new(
            r.name.clone(),
            role,
            r.qubits.iter().map(|&q| QubitRef(q)).collect(),
        ));
    }
    let layout = RegisterLayout::new(registers);
    let mut inputs = Vec::new();
    let mut ancillas = Vec::new();
    for reg in &layout.registers {
        if !reg.role.is_start_family() {
            continue;
        }
        if reg.role.is_input() {
            inputs.extend(reg.qubits.iter().copied());
        } else {
            ancillas.extend(reg.qubits.iter().copied());
        }
    }
    let mut gates = Vec::with_capacity(doc.gates.len());
    for g in &doc.gates {
        gates.push(parse_gate(g)?);
    }
    let circuit = Circuit::new(
        doc.width,
        inputs,
        ancillas,
        gates,
        doc.traced.iter().map(|&q| QubitRef(q)).collect(),
        doc.outputs.iter().map(|&q| QubitRef(q)).collect(),
        layout,
    );
    let report = circuit.validate();
    if !report.is_well_formed() {
        return Err(Error::Invalid(report));
    }
    Ok(circuit)
}

fn parse_gate(doc: &GateDoc) -> Result<Gate> {
    let kind = match doc.kind.as_str() {
        "H" => GateKind::H,
        "X" => GateKind::X,
        "Z" => GateKind::Z,
        "S" => GateKind::S,
        "T" => GateKind::T,
        "CNOT" => GateKind::Cnot,
        "CZ" => GateKind::Cz,
        "SWAP2" => GateKind::Swap2,
        "FANOUT" => {
            let k = doc
                .k
                .ok_or_else(|| Error::Parse("FANOUT gate missing field `k`".into()))?;
            if doc.operands.len() != k + 1 {
                return Err(Error::Parse(format!(
                    "FANOUT with k = {k} must list {} operands, found {}",
                    k + 1,
                    doc.operands.len()
                )));
            }
            GateKind::Fanout { targets: k }
        }
        other => return Err(Error::Parse(format!("unknown gate kind `{other}`"))),
    };
    Ok(Gate {
        kind,
        operands: doc.operands.iter().map(|&q| QubitRef(q)).collect(),
        controls: doc.controls.iter().map(|&q| QubitRef(q)).collect(),
    })
}

pub fn read_circuit_file(path: impl AsRef<std::path::Path>) -> Result<Circuit> {
    read_circuit(&std::fs::read_to_string(path)?)
}

pub fn write_circuit_file(circuit: &Circuit, path: impl AsRef<std::path::Path>) -> Result<()> {
    std::fs::write(path, write_circuit(circuit)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Circuit {
        Circuit::channel(
            3,
            2,
            vec![
                Gate::h(0),
                Gate::cnot(0, 2),
                Gate::fanout(1, &[2]).with_controls(vec![QubitRef(0)]),
            ],
            vec![QubitRef(0)],
            vec![QubitRef(2), QubitRef(1)],
        )
    }

    #[test]
    fn roundtrip_is_structural_identity() {
        let c = sample();
        let text = write_circuit(&c).unwrap();
        let back = read_circuit(&text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn missing_width_names_the_field() {
        let err = read_circuit(r#"{"version":1,"registers":[],"gates":[],"traced":[],"outputs":[]}"#)
            .unwrap_err();
        assert!(err.to_string().contains("width"), "{err}");
    }

    #[test]
    fn version_mismatch_is_rejected() {
        let mut text = write_circuit(&sample()).unwrap();
        text = text.replace("\"version\": 1", "\"version\": 9");
        assert!(matches!(read_circuit(&text), Err(Error::Version { found: 9, .. })));
    }

    #[test]
    fn duplicate_register_qubit_is_rejected() {
        let text = r#"{
            "version": 1, "width": 2,
            "registers": [
                {"name": "h", "role": "H_1", "qubits": [0, 1]},
                {"name": "a", "role": "A_1", "qubits": [1]}
            ],
            "gates": [], "traced": [], "outputs": [0, 1]
        }"#;
        let err = read_circuit(text).unwrap_err();
        assert!(err.to_string().contains("overlapping registers"), "{err}");
    }
}
