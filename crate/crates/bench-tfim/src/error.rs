use circuit_core::CircuitError;
use qsp_numerics::QspError;
use sim_statevector::SimError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TfimError {
    #[error("invalid benchmark configuration: {0}")]
    Config(String),
    #[error(
        "post-selection starved: {accepted} of {required} accepted shots after \
         {raw_shots} raw shots (acceptance rate {rate:.3e})"
    )]
    PostSelectionStarved {
        accepted: u64,
        required: u64,
        raw_shots: u64,
        rate: f64,
    },
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Phases(#[from] QspError),
    #[error(transparent)]
    Statevector(#[from] SimError),
}
