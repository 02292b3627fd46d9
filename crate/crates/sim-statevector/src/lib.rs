//! Dense statevector simulator backend.
//!
//! Holds all 2^n complex amplitudes with qubit 0 as the most significant
//! index bit. Supports the full gate alphabet including multi-controlled
//! gates (applied by index masking, never decomposed), stochastic-Pauli
//! trajectory noise, computational-basis sampling with readout flips,
//! post-selection, and exact Pauli expectation values for oracle duty.

mod error;
mod sampling;
mod state;

pub use error::SimError;
pub use sampling::{sample_bitstrings, sample_counts};
pub use state::{dense_unitary, expectation, run_circuit, StateVector};

/// Unitarity drift tolerance for state norms.
pub const EPS_UNITARY: f64 = 1e-10;
/// Tolerance for dense-matrix oracle comparisons.
pub const EPS_ORACLE: f64 = 1e-9;
