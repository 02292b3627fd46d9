//! Randomized benchmarking with depth-truncated Clifford layers.
//!
//! Each instance prepares a random tensor-product stabilizer state fixed by
//! a random signed Pauli, applies a sequence of layers cut as contiguous
//! windows out of uniformly random Clifford circuits, rotates the conjugated
//! Pauli into the computational basis, and records its measured eigenvalue.
//! Averaged over instances, the signal decays as a single exponential
//! f = A p^m in the layer count, and the fitted rate yields an
//! error-per-layer figure r. A binary search then finds the largest window
//! fraction mu whose r stays below a failure threshold; the triple
//! (n, mu_max, r_mu) is the benchmark's metric.
//!
//! The `analysis` module quantifies how coherent error cancellation between
//! separated layers biases the fitted rate: a Monte-Carlo estimate of the
//! cancellation probability M_k, the resulting bound on the second-order
//! decay term, and the predicted bias of the exponential fit under the
//! worst case.

pub mod analysis;
pub mod config;
pub mod decay;
pub mod error;
pub mod layers;
pub mod metric;
pub mod report;

pub use analysis::{estimate_mk, predicted_bias_curve, s2_bound, worst_case_s2};
pub use config::{CliffordRBConfig, MIN_EFFECTIVE_SHOTS};
pub use decay::{
    collect_decay, collect_decay_at, fit_decay, DecayFit, DepthData, StabilizerBackend,
};
pub use error::CliffordError;
pub use layers::{build_rb_instance, make_mu_layer, random_signed_pauli, MuLayerMeta, RbInstance};
pub use metric::{
    epsilon_mu, search_mu_with, step5_decision, CliffordMetric, MuSearchOutcome, SearchStep,
    SEARCH_ITERATION_CAP,
};
pub use report::{run_rb_search, search_mu, IterationRecord, RbReport};
