use circuit_core::CircuitError;
use sim_stabilizer::StabError;
use sim_statevector::SimError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GhzError {
    #[error("invalid benchmark configuration: {0}")]
    Config(String),
    #[error("GHZ preparation needs at least 2 qubits, got {0}")]
    TooFewQubits(usize),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Stabilizer(#[from] StabError),
    #[error(transparent)]
    Statevector(#[from] SimError),
}
