//! Maximum output fidelity by alternating projected gradient ascent.
//!
//! The objective F(Q₁(ρ), Q₂(ξ)) is jointly concave in (ρ, ξ): fidelity is
//! jointly concave and the channels are linear. Each half-step fixes one
//! input and ascends the other along the clamped fidelity gradient, with a
//! projection back onto the density manifold and backtracking on the step
//! size, so accepted objective values never decrease and converged points
//! are global maxima up to tolerance. Restarts are independent and run in
//! parallel; ties resolve to the lowest restart index.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::exec;
use crate::metrics::channel::{ChannelPair, CompiledChannel};
use crate::metrics::distance::fidelity;
use crate::metrics::linalg::{hermitize, project_density, psd_inv_sqrt, psd_sqrt};
use crate::sim::{derive_seed, random_density_with, rng_from_seed, DensityMatrix};
use crate::Result;

#[derive(Copy, Clone, Debug)]
pub struct OptimizerConfig {
    pub max_iterations: usize,
    /// Convergence threshold on the objective change per outer round.
    pub convergence_tolerance: f64,
    pub restart_count: usize,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            max_iterations: 400,
            convergence_tolerance: 1e-7,
            restart_count: 8,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OutputFidelityResult {
    pub value: f64,
    pub rho: DensityMatrix,
    pub xi: DensityMatrix,
    pub converged: bool,
    pub iterations: usize,
    pub restart: usize,
    /// Accepted objective values, one per outer round; nondecreasing.
    pub trajectory: Vec<f64>,
}

/// max F(Q₁(ρ), Q₂(ξ)) over density inputs, with the maximizing pair.
pub fn max_output_fidelity(
    pair: &ChannelPair,
    cfg: &OptimizerConfig,
) -> Result<OutputFidelityResult> {
    let (ch1, ch2) = pair.compiled()?;
    let width = pair.input_width();

    let runs: Vec<Result<OutputFidelityResult>> = exec::map_indexed(cfg.restart_count, |r| {
        let (rho0, xi0) = if r == 0 {
            (
                DensityMatrix::maximally_mixed(width),
                DensityMatrix::maximally_mixed(width),
            )
        } else {
            let mut rng = rng_from_seed(derive_seed(cfg.seed, r as u64));
            (
                random_density_with(width, &mut rng),
                random_density_with(width, &mut rng),
            )
        };
        ascend_pair(&ch1, &ch2, rho0, xi0, cfg, r)
    });

    let mut best: Option<OutputFidelityResult> = None;
    for run in runs {
        let run = run?;
        let replace = match &best {
            None => true,
            Some(b) => run.value > b.value,
        };
        if replace {
            best = Some(run);
        }
    }
    Ok(best.expect("restart_count >= 1"))
}

fn ascend_pair(
    ch1: &CompiledChannel,
    ch2: &CompiledChannel,
    rho0: DensityMatrix,
    xi0: DensityMatrix,
    cfg: &OptimizerConfig,
    restart: usize,
) -> Result<OutputFidelityResult> {
    let width = rho0.width();
    let mut rho = rho0.into_matrix();
    let mut xi = xi0.into_matrix();
    let mut value = fidelity(&ch1.apply(&rho), &ch2.apply(&xi))?;
    let mut trajectory = vec![value];
    let mut converged = false;
    let mut iterations = 0;

    for iter in 0..cfg.max_iterations {
        iterations = iter + 1;
        let out1 = ch1.apply(&rho);
        let new_xi = ascend_one_side(ch2, &out1, &xi)?;
        xi = new_xi;
        let out2 = ch2.apply(&xi);
        let new_rho = ascend_one_side(ch1, &out2, &rho)?;
        rho = new_rho;

        let new_value = fidelity(&ch1.apply(&rho), &ch2.apply(&xi))?;
        // accepted steps never decrease the objective
        let gain = new_value - value;
        value = value.max(new_value);
        trajectory.push(value);
        if gain.abs() < cfg.convergence_tolerance {
            converged = true;
            break;
        }
    }

    Ok(OutputFidelityResult {
        value,
        rho: DensityMatrix::new(width, rho)?,
        xi: DensityMatrix::new(width, xi)?,
        converged,
        iterations,
        restart,
        trajectory,
    })
}

/// One projected-gradient inner loop: maximize F(fixed, ch(state)) over the
/// density `state`, returning a state whose objective is no worse.
fn ascend_one_side(
    ch: &CompiledChannel,
    fixed_output: &DMatrix<Complex64>,
    state: &DMatrix<Complex64>,
) -> Result<DMatrix<Complex64>> {
    const MAX_INNER: usize = 25;
    const MAX_BACKTRACK: usize = 30;

    let sqrt_fixed = psd_sqrt(fixed_output);
    let mut state = state.clone();
    let mut value = fidelity(fixed_output, &ch.apply(&state))?;

    for _ in 0..MAX_INNER {
        // ∇_A tr√(√B A √B) = ½ √B (√B A √B)^{-1/2} √B, pulled back through
        // the channel adjoint
        let out = ch.apply(&state);
        let m = &sqrt_fixed * &out * &sqrt_fixed;
        let grad_out = &sqrt_fixed * psd_inv_sqrt(&m) * &sqrt_fixed * Complex64::new(0.5, 0.0);
        let grad = hermitize(&ch.apply_adjoint(&grad_out));

        let mut eta = 1.0;
        let mut accepted = false;
        for _ in 0..MAX_BACKTRACK {
            let candidate = project_density(&(&state + &grad * Complex64::new(eta, 0.0)));
            let cand_value = fidelity(fixed_output, &ch.apply(&candidate))?;
            if cand_value > value + 1e-14 {
                state = candidate;
                value = cand_value;
                accepted = true;
                break;
            }
            eta *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::{tensor_parallel, Circuit, Gate, QubitRef};

    /// Constant channel preparing |0⟩ (or |1⟩): swap the input away, trace
    /// it, optionally flip the fresh output.
    pub(crate) fn constant_channel(one: bool) -> Circuit {
        let mut gates = vec![Gate::swap2(0, 1)];
        if one {
            gates.push(Gate::x(0));
        }
        Circuit::channel(2, 1, gates, vec![QubitRef(1)], vec![QubitRef(0)])
    }

    #[test]
    fn identical_channels_reach_fidelity_one() {
        let q = Circuit::unitary(1, vec![Gate::h(0)]);
        let pair = ChannelPair::new(q.clone(), q).unwrap();
        let res = max_output_fidelity(&pair, &OptimizerConfig::default()).unwrap();
        assert!(res.converged);
        assert!((res.value - 1.0).abs() < 1e-6, "value {}", res.value);
    }

    #[test]
    fn orthogonal_constant_channels_stay_at_zero() {
        let pair = ChannelPair::new(constant_channel(false), constant_channel(true)).unwrap();
        let res = max_output_fidelity(&pair, &OptimizerConfig::default()).unwrap();
        assert!(res.value < 1e-9, "value {}", res.value);
    }

    #[test]
    fn identity_versus_constant_reaches_one() {
        let pair = ChannelPair::new(Circuit::unitary(1, vec![]), constant_channel(false)).unwrap();
        let res = max_output_fidelity(&pair, &OptimizerConfig::default()).unwrap();
        assert!((res.value - 1.0).abs() < 1e-6, "value {}", res.value);
        // the maximizing identity input must be (close to) |0⟩⟨0|
        assert!((res.rho.matrix()[(0, 0)].re - 1.0).abs() < 1e-4);
    }

    #[test]
    fn trajectory_is_nondecreasing() {
        let q1 = Circuit::unitary(1, vec![Gate::h(0)]);
        let q2 = Circuit::unitary(1, vec![Gate::t(0)]);
        let pair = ChannelPair::new(q1, q2).unwrap();
        let res = max_output_fidelity(&pair, &OptimizerConfig::default()).unwrap();
        for w in res.trajectory.windows(2) {
            assert!(w[1] >= w[0] - 1e-12);
        }
    }

    /// Dephasing channel: the input is copied to an ancilla that gets traced.
    fn dephasing_channel() -> Circuit {
        Circuit::channel(
            2,
            1,
            vec![Gate::cnot(0, 1)],
            vec![QubitRef(1)],
            vec![QubitRef(0)],
        )
    }

    /// Constant channel preparing |+⟩.
    fn constant_plus() -> Circuit {
        Circuit::channel(
            2,
            1,
            vec![Gate::swap2(0, 1), Gate::h(0)],
            vec![QubitRef(1)],
            vec![QubitRef(0)],
        )
    }

    #[test]
    fn output_fidelity_is_multiplicative_on_a_sample() {
        // factor 1: dephasing vs constant |+⟩ has maximum fidelity 1/√2
        // (every dephased state is diagonal, and ⟨+|diag|+⟩ = ½);
        // factor 2: identity vs constant |1⟩ has maximum fidelity 1.
        let cfg = OptimizerConfig {
            convergence_tolerance: 1e-10,
            ..OptimizerConfig::default()
        };
        let f1 = max_output_fidelity(
            &ChannelPair::new(dephasing_channel(), constant_plus()).unwrap(),
            &cfg,
        )
        .unwrap()
        .value;
        assert!((f1 - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-5, "f1 = {f1}");

        let one_prep = constant_channel(true);
        let f2 = max_output_fidelity(
            &ChannelPair::new(Circuit::unitary(1, vec![]), one_prep.clone()).unwrap(),
            &cfg,
        )
        .unwrap()
        .value;

        let phi = tensor_parallel(&[dephasing_channel(), Circuit::unitary(1, vec![])]);
        let psi = tensor_parallel(&[constant_plus(), one_prep]);
        let product = max_output_fidelity(&ChannelPair::new(phi, psi).unwrap(), &cfg)
            .unwrap()
            .value;
        assert!(
            (product - f1 * f2).abs() < 1e-4,
            "product {product} vs factors {}",
            f1 * f2
        );
    }
}
