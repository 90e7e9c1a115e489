//! Distance measures on states and channels: fidelity, trace norm, the
//! two-sided fidelity/trace-norm relation, swap-test statistics, maximum
//! output fidelity, and diamond-norm distance.

mod channel;
mod diamond;
mod distance;
pub mod linalg;
mod optimize;

pub use channel::{ChannelPair, CompiledChannel, KrausChannel};
pub use diamond::{diamond_norm_distance, DiamondResult};
pub use distance::{fidelity, fidelity_states, fvdg_gap, swap_antisym_prob, trace_norm};
pub use optimize::{max_output_fidelity, OptimizerConfig, OutputFidelityResult};
