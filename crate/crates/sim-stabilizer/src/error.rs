use circuit_core::CircuitError;
use thiserror::Error;

/// Errors produced by the stabilizer backend.
#[derive(Debug, Error)]
pub enum StabError {
    /// The gate cannot be lowered to the Clifford primitive set.
    #[error("unsupported gate for stabilizer simulation: {0}")]
    UnsupportedGate(String),

    /// A rotation angle is not an integer multiple of pi/2.
    #[error("non-Clifford rotation angle {angle} on {kind}")]
    NonCliffordAngle { kind: &'static str, angle: f64 },

    /// The observable must be a tensor product of Z and I factors.
    #[error("observable is not diagonal (Z/I-only)")]
    NonDiagonalObservable,

    /// The operation requires a non-identity Pauli string.
    #[error("Pauli string acts as the identity")]
    IdentityPauli,

    /// Qubit counts of the inputs disagree.
    #[error("qubit count mismatch: circuit has {circuit}, operand has {operand}")]
    QubitCountMismatch { circuit: usize, operand: usize },

    /// Invalid circuit or noise description.
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}
