//! Shared circuit intermediate representation for the QuSquare benchmark suite.
//!
//! The types here are the lingua franca between circuit generators, the two
//! simulator backends, and the reporting layer:
//!
//! - [`Gate`] / [`GateKind`]: one gate with optional multi-control spec.
//! - [`Circuit`]: an ordered list of moments (layers of disjoint-support gates).
//! - [`PauliString`]: a signed N-qubit Pauli operator with bit-packed X/Z parts.
//! - [`NoiseModel`]: stochastic Pauli noise attached after each moment plus
//!   readout bit flips.
//!
//! All types are immutable value types after construction (methods that grow a
//! circuit take `&mut self` during building); operations never mutate shared
//! state, so everything is safe to fan out across worker threads.

mod circuit;
mod error;
mod gate;
mod noise;
mod pauli;
pub mod rng;
pub mod threads;

pub use circuit::{basis_change_layer, concat, Circuit};
pub use error::CircuitError;
pub use gate::{BaseMatrix, Gate, GateKind};
pub use noise::{LayerNoise, NoiseModel, WeightedPauli};
pub use pauli::{PauliOp, PauliString};
