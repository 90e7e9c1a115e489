//! Depth reduction for mixed-state quantum circuits.
//!
//! The crate compiles a pair of circuits into a pair of logarithmic-depth
//! (or, with fan-out gates, constant-depth) circuits whose images are close
//! exactly when the original images are, and ships the numerics needed to
//! check the quantitative bounds of that construction at desk scale: a dense
//! simulator, fidelity / trace-norm / diamond-norm metrics, and a
//! verification harness with seeded, reproducible reports.

pub mod error;
pub mod exec;
pub mod ir;
pub mod metrics;
pub mod reduction;
pub mod sim;

pub use error::{Error, Result};
