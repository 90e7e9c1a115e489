//! Mixed-state circuit representation: gates, registers, validation, depth
//! accounting, slicing, composition, and the circuit file format.

mod circuit;
mod depth;
mod gate;
mod io;
mod layout;
mod transform;

pub use circuit::{Circuit, ValidationReport, Violation};
pub use depth::{depth, layers, CostModel, DepthReport};
pub use gate::{Gate, GateKind, QubitRef};
pub use io::{read_circuit, read_circuit_file, write_circuit, write_circuit_file, FORMAT_VERSION};
pub use layout::{Register, RegisterLayout, Role};
pub use transform::{
    interior_piece, pad_pieces, permutation_gates, permutation_swap_layers, slice, tensor_parallel,
};
