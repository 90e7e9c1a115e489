//! The depth-reduction construction and its gadgets: swap operator and swap
//! test circuits, controlled-operation lowering, the sliced-and-tested
//! parallel form of a circuit pair, completeness witnesses, amplification,
//! and the controlled dispatch used for distinguishability instances.

mod build;
mod dispatch;
mod gadgets;
mod lower;
mod witness;

pub use build::{
    amplify, build_log_depth_ci, selection_variant, BoundaryGates, CIInstance,
    ConstructionManifest, DepthBound, ManifestRegister, ManifestRegisters, QCDInstance,
    ReductionOptions, SideStructure, TestSelection, DEPTH_FANOUT_CONST, DEPTH_LOG_COEFF,
    DEPTH_LOG_OFFSET,
};
pub use dispatch::build_controlled_dispatch;
pub use gadgets::{swap_operator_gadget, swap_test_fail_prob, swap_test_gadget};
pub use lower::lower_controlled;
pub use witness::{
    evaluate_witness, witness_input, witness_input_padded, WitnessEvaluation, WitnessState,
};
