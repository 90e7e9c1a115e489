//! Dense numerical simulation of normalized circuits on pure and mixed
//! states, with partial trace, purification, and measurement.

mod apply;
mod measure;
mod purify;
mod random;
mod state;
mod trace;

pub use apply::{
    apply_circuit_density, apply_circuit_pure, apply_gate_amps, apply_gates_amps, circuit_unitary,
    complement, gather_bits, scatter_bits,
};
pub use measure::{
    dephase_qubit, measure_qubit, outcome_probabilities, MeasurementBranch, BRANCH_CUTOFF,
};
pub use purify::{purified_system_wires, purify};
pub use random::{
    derive_seed, random_density, random_density_dim, random_density_dim_with, random_density_with,
    random_pure, random_pure_with, rng_from_seed,
};
pub use state::{DensityMatrix, PureState};
pub use trace::{partial_trace, reduce_pure};

/// Default absolute tolerance for state invariants.
pub const STATE_TOL: f64 = 1e-10;
/// Default absolute tolerance for algebraic identities.
pub const ALGEBRA_TOL: f64 = 1e-12;
