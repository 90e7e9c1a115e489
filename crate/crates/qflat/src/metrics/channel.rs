//! Channels in Kraus form, extracted from circuits.
//!
//! A normalized circuit is an isometry from its input wires into the full
//! width followed by a trace-out; grouping the isometry's rows by the traced
//! index yields Kraus operators. All optimizer inner loops work on this form
//! because it makes both the channel and its adjoint cheap.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::exec;
use crate::ir::Circuit;
use crate::sim::{apply_circuit_pure, gather_bits, PureState};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct KrausChannel {
    in_width: usize,
    out_width: usize,
    ops: Vec<DMatrix<Complex64>>,
}

impl KrausChannel {
    pub fn from_circuit(circuit: &Circuit) -> Result<Self> {
        let circuit = circuit.clone().validated()?;
        let in_width = circuit.inputs().len();
        let out_width = circuit.outputs().len();
        let traced_width = circuit.traced().len();
        let in_dim = 1usize << in_width;
        let out_dim = 1usize << out_width;

        // columns of the isometry, one simulation per input basis state
        let columns: Vec<PureState> = exec::map_indexed(in_dim, |k| {
            apply_circuit_pure(&circuit, &PureState::basis(in_width, k))
                .expect("basis state matches input width")
        });

        let mut ops: Vec<DMatrix<Complex64>> = (0..1usize << traced_width)
            .map(|_| DMatrix::zeros(out_dim, in_dim))
            .collect();
        for (k, col) in columns.iter().enumerate() {
            for (full, &amp) in col.amplitudes().iter().enumerate() {
                if amp == Complex64::ZERO {
                    continue;
                }
                let out = gather_bits(full, circuit.outputs());
                let t = gather_bits(full, circuit.traced());
                ops[t][(out, k)] = amp;
            }
        }
        // traced indices the circuit never populates contribute nothing
        ops.retain(|k| k.norm() > 1e-14);
        Ok(KrausChannel {
            in_width,
            out_width,
            ops,
        })
    }

    pub fn in_width(&self) -> usize {
        self.in_width
    }
    pub fn out_width(&self) -> usize {
        self.out_width
    }
    pub fn in_dim(&self) -> usize {
        1 << self.in_width
    }
    pub fn out_dim(&self) -> usize {
        1 << self.out_width
    }
    pub fn ops(&self) -> &[DMatrix<Complex64>] {
        &self.ops
    }

    /// Σ K ρ K*.
    pub fn apply(&self, rho: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        let mut out = DMatrix::zeros(self.out_dim(), self.out_dim());
        for k in &self.ops {
            let kr = k * rho;
            out += &kr * k.adjoint();
        }
        out
    }

    /// Σ K* M K, the Heisenberg-picture adjoint.
    pub fn apply_adjoint(&self, m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        let mut out = DMatrix::zeros(self.in_dim(), self.in_dim());
        for k in &self.ops {
            let km = k.adjoint() * m;
            out += &km * k;
        }
        out
    }

    /// Σ K*K, identity for a trace-preserving channel.
    pub fn completeness(&self) -> DMatrix<Complex64> {
        let mut out = DMatrix::zeros(self.in_dim(), self.in_dim());
        for k in &self.ops {
            out += k.adjoint() * k;
        }
        out
    }
}

/// Entry budget above which the dense transfer matrix is not materialized.
const TRANSFER_LIMIT: usize = 4096;

/// A channel compiled for repeated application inside optimizer loops.
///
/// Small channels get a dense superoperator: with column-major vectorization
/// vec(KρK*) = (conj K ⊗ K) vec(ρ), so the channel is one matrix-vector
/// product and the Heisenberg adjoint is the conjugate transpose of the same
/// matrix. Larger channels fall back to the Kraus sum.
#[derive(Clone, Debug)]
pub struct CompiledChannel {
    in_dim: usize,
    out_dim: usize,
    form: CompiledForm,
}

#[derive(Clone, Debug)]
enum CompiledForm {
    Transfer {
        s: DMatrix<Complex64>,
        s_adj: DMatrix<Complex64>,
    },
    Kraus(KrausChannel),
}

impl CompiledChannel {
    pub fn from_kraus(ch: KrausChannel) -> Self {
        let in_dim = ch.in_dim();
        let out_dim = ch.out_dim();
        if in_dim * out_dim <= TRANSFER_LIMIT {
            let mut s = DMatrix::zeros(out_dim * out_dim, in_dim * in_dim);
            for k in ch.ops() {
                s += k.conjugate().kronecker(k);
            }
            let s_adj = s.adjoint();
            CompiledChannel {
                in_dim,
                out_dim,
                form: CompiledForm::Transfer { s, s_adj },
            }
        } else {
            CompiledChannel {
                in_dim,
                out_dim,
                form: CompiledForm::Kraus(ch),
            }
        }
    }

    pub fn from_circuit(circuit: &Circuit) -> Result<Self> {
        Ok(Self::from_kraus(KrausChannel::from_circuit(circuit)?))
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }
    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn apply(&self, rho: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        match &self.form {
            CompiledForm::Transfer { s, .. } => {
                let v = nalgebra::DVector::from_column_slice(rho.as_slice());
                let out = s * v;
                DMatrix::from_column_slice(self.out_dim, self.out_dim, out.as_slice())
            }
            CompiledForm::Kraus(ch) => ch.apply(rho),
        }
    }

    pub fn apply_adjoint(&self, m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        match &self.form {
            CompiledForm::Transfer { s_adj, .. } => {
                let v = nalgebra::DVector::from_column_slice(m.as_slice());
                let out = s_adj * v;
                DMatrix::from_column_slice(self.in_dim, self.in_dim, out.as_slice())
            }
            CompiledForm::Kraus(ch) => ch.apply_adjoint(m),
        }
    }
}

/// A pair of circuits implementing channels with a common input space H and
/// common output space K.
#[derive(Clone, Debug)]
pub struct ChannelPair {
    q1: Circuit,
    q2: Circuit,
}

impl ChannelPair {
    pub fn new(q1: Circuit, q2: Circuit) -> Result<Self> {
        if q1.inputs().len() != q2.inputs().len() {
            return Err(Error::DimensionMismatch {
                context: "channel pair input spaces",
                expected: q1.inputs().len(),
                found: q2.inputs().len(),
            });
        }
        if q1.outputs().len() != q2.outputs().len() {
            return Err(Error::DimensionMismatch {
                context: "channel pair output spaces",
                expected: q1.outputs().len(),
                found: q2.outputs().len(),
            });
        }
        Ok(ChannelPair { q1, q2 })
    }

    pub fn q1(&self) -> &Circuit {
        &self.q1
    }
    pub fn q2(&self) -> &Circuit {
        &self.q2
    }

    pub fn input_width(&self) -> usize {
        self.q1.inputs().len()
    }

    pub fn kraus(&self) -> Result<(KrausChannel, KrausChannel)> {
        Ok((
            KrausChannel::from_circuit(&self.q1)?,
            KrausChannel::from_circuit(&self.q2)?,
        ))
    }

    pub fn compiled(&self) -> Result<(CompiledChannel, CompiledChannel)> {
        Ok((
            CompiledChannel::from_circuit(&self.q1)?,
            CompiledChannel::from_circuit(&self.q2)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::{Gate, QubitRef};
    use crate::sim::{apply_circuit_density, random_density};

    fn sample_channel() -> Circuit {
        Circuit::channel(
            3,
            2,
            vec![Gate::h(0), Gate::cnot(0, 2), Gate::t(1), Gate::swap2(1, 2)],
            vec![QubitRef(0), QubitRef(2)],
            vec![QubitRef(1)],
        )
    }

    #[test]
    fn kraus_channel_is_trace_preserving() {
        let ch = KrausChannel::from_circuit(&sample_channel()).unwrap();
        let id = DMatrix::<Complex64>::identity(ch.in_dim(), ch.in_dim());
        assert!((ch.completeness() - id).norm() < 1e-12);
    }

    #[test]
    fn kraus_apply_matches_density_simulation() {
        let circuit = sample_channel();
        let ch = KrausChannel::from_circuit(&circuit).unwrap();
        for seed in 0..10 {
            let rho = random_density(2, seed);
            let via_kraus = ch.apply(rho.matrix());
            let via_sim = apply_circuit_density(&circuit, &rho).unwrap();
            assert!((&via_kraus - via_sim.matrix()).norm() < 1e-12);
        }
    }

    #[test]
    fn adjoint_is_the_inner_product_dual() {
        let ch = KrausChannel::from_circuit(&sample_channel()).unwrap();
        let rho = random_density(2, 1);
        let m = random_density(1, 2);
        // tr(M Φ(ρ)) = tr(Φ*(M) ρ)
        let lhs = (m.matrix() * ch.apply(rho.matrix())).trace();
        let rhs = (ch.apply_adjoint(m.matrix()) * rho.matrix()).trace();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn pair_requires_matching_dimensions() {
        let a = Circuit::unitary(1, vec![]);
        let b = Circuit::unitary(2, vec![]);
        assert!(ChannelPair::new(a, b).is_err());
    }

    #[test]
    fn compiled_transfer_matches_kraus_application() {
        let circuit = sample_channel();
        let kraus = KrausChannel::from_circuit(&circuit).unwrap();
        let compiled = CompiledChannel::from_kraus(kraus.clone());
        let rho = random_density(2, 21);
        assert!((compiled.apply(rho.matrix()) - kraus.apply(rho.matrix())).norm() < 1e-12);
        let m = random_density(1, 22);
        assert!(
            (compiled.apply_adjoint(m.matrix()) - kraus.apply_adjoint(m.matrix())).norm() < 1e-12
        );
    }
}
