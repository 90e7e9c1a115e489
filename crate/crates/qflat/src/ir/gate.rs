//! Gate vocabulary.
//!
//! The basis is `{H, X, Z, S, T, CNOT, CZ, SWAP2, FANOUT}`. Everything except
//! `FANOUT` acts on one or two qubits; `FANOUT` applies X to `k` targets
//! conditioned on one control, as a single constant-depth gate. Any gate may
//! additionally carry control qubits (the lowered form of a controlled
//! operation), which condition its fixed unitary without changing it.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

/// A wire index. Qubit 0 is the least significant tensor factor.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QubitRef(pub usize);

impl QubitRef {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for QubitRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q{}", self.0)
    }
}

impl From<usize> for QubitRef {
    fn from(i: usize) -> Self {
        QubitRef(i)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum GateKind {
    H,
    X,
    Z,
    S,
    T,
    Cnot,
    Cz,
    Swap2,
    /// One control, `targets` X-targets, applied as one gate.
    Fanout { targets: usize },
}

impl GateKind {
    /// Number of operand wires the gate consumes.
    pub fn arity(self) -> usize {
        match self {
            GateKind::H | GateKind::X | GateKind::Z | GateKind::S | GateKind::T => 1,
            GateKind::Cnot | GateKind::Cz | GateKind::Swap2 => 2,
            GateKind::Fanout { targets } => targets + 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::X => "X",
            GateKind::Z => "Z",
            GateKind::S => "S",
            GateKind::T => "T",
            GateKind::Cnot => "CNOT",
            GateKind::Cz => "CZ",
            GateKind::Swap2 => "SWAP2",
            GateKind::Fanout { .. } => "FANOUT",
        }
    }

    /// The fixed unitary, as a dense matrix over the operand wires.
    ///
    /// Operand 0 is the least significant index bit. Intended for small
    /// gates; the simulator never materializes this for wide fan-outs.
    pub fn matrix(self) -> DMatrix<Complex64> {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        match self {
            GateKind::H => DMatrix::from_row_slice(2, 2, &[s, s, s, -s]),
            GateKind::X => DMatrix::from_row_slice(2, 2, &[o, l, l, o]),
            GateKind::Z => DMatrix::from_row_slice(2, 2, &[l, o, o, -l]),
            GateKind::S => DMatrix::from_row_slice(2, 2, &[l, o, o, Complex64::new(0.0, 1.0)]),
            GateKind::T => DMatrix::from_row_slice(
                2,
                2,
                &[l, o, o, Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4)],
            ),
            kind => {
                // permutation/phase gates built entrywise
                let n = kind.arity();
                let dim = 1usize << n;
                let mut m = DMatrix::zeros(dim, dim);
                for col in 0..dim {
                    let (row, phase) = kind.permute_basis(col);
                    m[(row, col)] = phase;
                }
                m
            }
        }
    }

    /// Action on a computational basis state of the operand wires, for the
    /// permutation/phase members of the basis. Bit `i` of the index is
    /// operand `i`.
    fn permute_basis(self, idx: usize) -> (usize, Complex64) {
        let one = Complex64::new(1.0, 0.0);
        match self {
            GateKind::Cnot => {
                let out = if idx & 1 == 1 { idx ^ 2 } else { idx };
                (out, one)
            }
            GateKind::Cz => {
                let phase = if idx & 3 == 3 { -one } else { one };
                (idx, phase)
            }
            GateKind::Swap2 => {
                let b0 = idx & 1;
                let b1 = (idx >> 1) & 1;
                ((idx & !3) | (b0 << 1) | b1, one)
            }
            GateKind::Fanout { targets } => {
                let out = if idx & 1 == 1 {
                    let mask = ((1usize << targets) - 1) << 1;
                    idx ^ mask
                } else {
                    idx
                };
                (out, one)
            }
            _ => unreachable!("not a permutation/phase gate"),
        }
    }
}

/// A gate instance: a basis gate on `operands`, conditioned on every qubit in
/// `controls` being 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gate {
    pub kind: GateKind,
    pub operands: Vec<QubitRef>,
    pub controls: Vec<QubitRef>,
}

impl Gate {
    pub fn new(kind: GateKind, operands: Vec<QubitRef>) -> Self {
        Gate {
            kind,
            operands,
            controls: Vec::new(),
        }
    }

    pub fn with_controls(mut self, controls: Vec<QubitRef>) -> Self {
        self.controls = controls;
        self
    }

    pub fn h(q: usize) -> Self {
        Gate::new(GateKind::H, vec![q.into()])
    }
    pub fn x(q: usize) -> Self {
        Gate::new(GateKind::X, vec![q.into()])
    }
    pub fn z(q: usize) -> Self {
        Gate::new(GateKind::Z, vec![q.into()])
    }
    pub fn s(q: usize) -> Self {
        Gate::new(GateKind::S, vec![q.into()])
    }
    pub fn t(q: usize) -> Self {
        Gate::new(GateKind::T, vec![q.into()])
    }
    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::new(GateKind::Cnot, vec![control.into(), target.into()])
    }
    pub fn cz(a: usize, b: usize) -> Self {
        Gate::new(GateKind::Cz, vec![a.into(), b.into()])
    }
    pub fn swap2(a: usize, b: usize) -> Self {
        Gate::new(GateKind::Swap2, vec![a.into(), b.into()])
    }
    pub fn fanout(control: usize, targets: &[usize]) -> Self {
        let mut ops = vec![QubitRef(control)];
        ops.extend(targets.iter().map(|&t| QubitRef(t)));
        Gate::new(GateKind::Fanout { targets: targets.len() }, ops)
    }

    /// Every wire the gate touches: operands followed by controls.
    pub fn support(&self) -> impl Iterator<Item = QubitRef> + '_ {
        self.operands.iter().chain(self.controls.iter()).copied()
    }

    pub fn shifted(&self, offset: usize) -> Gate {
        Gate {
            kind: self.kind,
            operands: self.operands.iter().map(|q| QubitRef(q.0 + offset)).collect(),
            controls: self.controls.iter().map(|q| QubitRef(q.0 + offset)).collect(),
        }
    }

    /// Same gate expressed on remapped wires.
    pub fn remapped(&self, map: impl Fn(QubitRef) -> QubitRef) -> Gate {
        Gate {
            kind: self.kind,
            operands: self.operands.iter().map(|&q| map(q)).collect(),
            controls: self.controls.iter().map(|&q| map(q)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_matches_operand_shape() {
        assert_eq!(GateKind::H.arity(), 1);
        assert_eq!(GateKind::Swap2.arity(), 2);
        assert_eq!(GateKind::Fanout { targets: 5 }.arity(), 6);
    }

    #[test]
    fn basis_matrices_are_unitary() {
        for kind in [
            GateKind::H,
            GateKind::X,
            GateKind::Z,
            GateKind::S,
            GateKind::T,
            GateKind::Cnot,
            GateKind::Cz,
            GateKind::Swap2,
            GateKind::Fanout { targets: 2 },
        ] {
            let m = kind.matrix();
            let dim = m.nrows();
            let prod = &m * m.adjoint();
            let id = DMatrix::<Complex64>::identity(dim, dim);
            assert!((prod - id).norm() < 1e-12, "{} not unitary", kind.name());
        }
    }

    #[test]
    fn fanout_flips_targets_when_control_set() {
        let m = GateKind::Fanout { targets: 2 }.matrix();
        // |001> (control=1, targets 00) -> |111>
        assert_eq!(m[(0b111, 0b001)], Complex64::new(1.0, 0.0));
        // |000> fixed
        assert_eq!(m[(0b000, 0b000)], Complex64::new(1.0, 0.0));
    }
}
