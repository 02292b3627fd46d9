use circuit_core::CircuitError;
use sim_stabilizer::StabError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliffordError {
    #[error("invalid benchmark configuration: {0}")]
    Config(String),
    #[error("backend failure at depth {depth}, instance {instance}: {source}")]
    Backend {
        depth: usize,
        instance: usize,
        source: StabError,
    },
    #[error("decay fit needs at least two positive points, found {usable}")]
    FitUnderdetermined { usable: usize },
    #[error("mu search exceeded {0} iterations without terminating")]
    SearchStuck(usize),
    #[error(transparent)]
    Stabilizer(#[from] StabError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}
