//! Binary-symplectic stabilizer backend: Pauli conjugation through Clifford
//! circuits, bit-packed tableau simulation, uniform random Clifford sampling
//! (Bravyi-Maslov canonical form, arXiv:2003.09412), stabilizer product-state
//! preparation, and noisy shot sampling of diagonal Pauli observables.
//!
//! Rotation gates are accepted when their angles are integer multiples of
//! pi/2 and are lowered to {H, S, Sdg, X, Y, Z, CX, CZ, SWAP} internally;
//! anything else is rejected as non-Clifford.

mod clifford;
mod error;
mod measure;
mod prep;
mod random_clifford;
mod tableau;

pub use clifford::conjugate_pauli;
pub use error::StabError;
pub use measure::run_pauli_measurement;
pub use prep::stabilizer_product_state_prep;
pub use random_clifford::random_clifford;
pub use tableau::StabilizerTableau;
