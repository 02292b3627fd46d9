use circuit_core::CircuitError;

/// Errors from the statevector backend.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    #[error("qubit index {index} out of range for {qubit_count} qubits")]
    QubitOutOfRange { index: usize, qubit_count: usize },
    #[error("dense unitary requested for {n} qubits, guard allows at most {max}")]
    SizeGuard { n: usize, max: usize },
    #[error("pauli string has {pauli} qubits, state has {qubits}")]
    PauliSizeMismatch { pauli: usize, qubits: usize },
    #[error("post-selection probability is zero")]
    ImpossiblePostselection,
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}
