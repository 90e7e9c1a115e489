//! Structural transformations: slicing into single-gate pieces, identity
//! padding, parallel (tensor) composition, and wire permutations realized as
//! swap layers.

use crate::ir::{Circuit, Gate, QubitRef, RegisterLayout};
use crate::{Error, Result};

/// Decompose a normalized circuit into pieces: the first piece performs the
/// ancilla preparation together with gate 1, and every later piece is exactly
/// one gate. Pieces are unitary circuits over the full width (nothing is
/// traced); composing them sequentially and then applying the original
/// trace-out reproduces the original channel.
pub fn slice(circuit: &Circuit) -> Result<Vec<Circuit>> {
    if !circuit.is_normalized() {
        return Err(Error::NonNormalized);
    }
    let circuit = circuit.clone().validated()?;
    let width = circuit.width();
    let all: Vec<QubitRef> = (0..width).map(QubitRef).collect();

    let first_gates: Vec<Gate> = circuit.gates().first().cloned().into_iter().collect();
    let mut pieces = vec![Circuit::new(
        width,
        circuit.inputs().to_vec(),
        circuit.ancillas().to_vec(),
        first_gates,
        Vec::new(),
        all.clone(),
        RegisterLayout::plain(circuit.inputs(), circuit.ancillas()),
    )];
    for gate in circuit.gates().iter().skip(1) {
        pieces.push(interior_piece(width, vec![gate.clone()]));
    }
    Ok(pieces)
}

/// A piece past the first: the full width is input, one (or zero) gates act.
pub fn interior_piece(width: usize, gates: Vec<Gate>) -> Circuit {
    let all: Vec<QubitRef> = (0..width).map(QubitRef).collect();
    Circuit::new(
        width,
        all.clone(),
        Vec::new(),
        gates,
        Vec::new(),
        all.clone(),
        RegisterLayout::plain(&all, &[]),
    )
}

/// Extend a piece list to `n` pieces with explicit identity pieces.
pub fn pad_pieces(pieces: &mut Vec<Circuit>, n: usize) {
    let width = pieces.first().map_or(0, Circuit::width);
    while pieces.len() < n {
        pieces.push(interior_piece(width, Vec::new()));
    }
}

/// Place circuits side by side on disjoint wires. Widths add, the depth is
/// the maximum of the component depths, and layout block indices are
/// re-based so the combined layout stays disjoint.
pub fn tensor_parallel(parts: &[Circuit]) -> Circuit {
    let width = parts.iter().map(Circuit::width).sum();
    let mut inputs = Vec::new();
    let mut ancillas = Vec::new();
    let mut gates = Vec::new();
    let mut traced = Vec::new();
    let mut outputs = Vec::new();
    let mut registers = Vec::new();
    let mut offset = 0usize;
    let mut block_offset = 0u32;
    for (i, part) in parts.iter().enumerate() {
        let shift = |qs: &[QubitRef]| -> Vec<QubitRef> {
            qs.iter().map(|q| QubitRef(q.0 + offset)).collect()
        };
        inputs.extend(shift(part.inputs()));
        ancillas.extend(shift(part.ancillas()));
        traced.extend(shift(part.traced()));
        outputs.extend(shift(part.outputs()));
        gates.extend(part.gates().iter().map(|g| g.shifted(offset)));
        let prefix = if parts.len() > 1 { format!("p{i}.") } else { String::new() };
        registers.extend(part.layout().shifted(offset, block_offset, &prefix).registers);
        offset += part.width();
        block_offset += part.layout().max_block();
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
}

/// Realize a wire permutation as at most two layers of disjoint SWAP2 gates.
///
/// `perm[i]` is the wire on which the content initially at wire `i` must end
/// up. Any permutation factors into two involutions, so two layers always
/// suffice.
pub fn permutation_swap_layers(perm: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let n = perm.len();
    let mut visited = vec![false; n];
    let mut first: Vec<(usize, usize)> = Vec::new();
    let mut second: Vec<(usize, usize)> = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut cycle = vec![start];
        visited[start] = true;
        let mut next = perm[start];
        while next != start {
            visited[next] = true;
            cycle.push(next);
            next = perm[next];
        }
        let len = cycle.len();
        if len == 1 {
            continue;
        }
        // rotation-by-one = (j ↦ 1−j) ∘ (j ↦ −j) on cycle positions
        for j in 0..len {
            let k = (len - j) % len;
            if j < k {
                first.push((cycle[j], cycle[k]));
            }
            let k = (len + 1 - j) % len;
            if j < k {
                second.push((cycle[j], cycle[k]));
            }
        }
    }
    let mut layers = Vec::new();
    if !first.is_empty() {
        layers.push(first);
    }
    if !second.is_empty() {
        layers.push(second);
    }
    layers
}

/// The swap layers of [`permutation_swap_layers`] as gates.
pub fn permutation_gates(perm: &[usize]) -> Vec<Gate> {
    permutation_swap_layers(perm)
        .into_iter()
        .flatten()
        .map(|(a, b)| Gate::swap2(a, b))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::{depth, CostModel};

    fn apply_perm_layers(n: usize, layers: &[Vec<(usize, usize)>]) -> Vec<usize> {
        let mut v: Vec<usize> = (0..n).collect();
        for layer in layers {
            for &(a, b) in layer {
                v.swap(a, b);
            }
        }
        v
    }

    #[test]
    fn slice_counts_pieces() {
        let c = Circuit::channel(
            2,
            1,
            vec![Gate::h(0), Gate::cnot(0, 1), Gate::x(1), Gate::cz(0, 1)],
            vec![QubitRef(0)],
            vec![QubitRef(1)],
        );
        let pieces = slice(&c).unwrap();
        assert_eq!(pieces.len(), 4);
        assert_eq!(pieces[0].ancillas(), &[QubitRef(1)]);
        assert_eq!(pieces[0].gate_count(), 1);
        for piece in &pieces[1..] {
            assert_eq!(piece.gate_count(), 1);
            assert!(piece.ancillas().is_empty());
        }
    }

    #[test]
    fn slice_of_single_gate_circuit_is_identity_piece() {
        let c = Circuit::unitary(1, vec![Gate::h(0)]);
        let pieces = slice(&c).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0], c);
    }

    #[test]
    fn slice_rejects_non_normalized() {
        let mut c = Circuit::channel(2, 1, vec![Gate::h(0)], vec![], (0..2).map(QubitRef).collect::<Vec<_>>());
        c.defer_prep(QubitRef(1), 1);
        assert!(matches!(slice(&c), Err(Error::NonNormalized)));
    }

    #[test]
    fn tensor_widths_add_and_depth_is_max() {
        let a = Circuit::unitary(1, vec![Gate::h(0)]);
        let b = Circuit::unitary(1, vec![Gate::x(0)]);
        let t = tensor_parallel(&[a, b]);
        assert_eq!(t.width(), 2);
        assert!(t.validate().is_well_formed());
        assert_eq!(depth(&t, CostModel::default()).unwrap().layer_count, 1);
    }

    #[test]
    fn tensor_of_copies_keeps_depth() {
        let base = Circuit::unitary(2, vec![Gate::h(0), Gate::cnot(0, 1), Gate::x(0)]);
        let d0 = depth(&base, CostModel::default()).unwrap().layer_count;
        let copies: Vec<Circuit> = (0..4).map(|_| base.clone()).collect();
        let t = tensor_parallel(&copies);
        assert_eq!(t.width(), 8);
        assert_eq!(depth(&t, CostModel::default()).unwrap().layer_count, d0);
    }

    #[test]
    fn permutation_layers_realize_the_permutation() {
        let cases: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![3, 2, 1, 0],
            vec![4, 0, 1, 2, 3],
            vec![2, 3, 4, 5, 0, 1, 7, 6],
        ];
        for perm in cases {
            let layers = permutation_swap_layers(&perm);
            assert!(layers.len() <= 2, "more than two layers for {perm:?}");
            for layer in &layers {
                let mut seen = std::collections::BTreeSet::new();
                for &(a, b) in layer {
                    assert!(seen.insert(a) && seen.insert(b), "non-disjoint layer");
                }
            }
            let v = apply_perm_layers(perm.len(), &layers);
            // content starting at i must land at perm[i]
            for (i, &dest) in perm.iter().enumerate() {
                assert_eq!(v[dest], i, "perm {perm:?} not realized: got {v:?}");
            }
        }
    }
}
