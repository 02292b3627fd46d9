use serde::{Deserialize, Serialize};

use crate::error::GhzError;

/// Layout of the CX fan spreading the root superposition across the register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Topology {
    /// Nearest-neighbour ladder: CX(0,1), CX(1,2), ... with depth n.
    LinearChain,
    /// Doubling fan-out: every already-entangled qubit copies to a fresh one
    /// each round, giving depth 1 + ceil(log2 n).
    FanoutTree,
}

impl Default for Topology {
    fn default() -> Topology {
        Topology::FanoutTree
    }
}

/// How the benchmark walks candidate sizes when looking for the largest
/// certifiable state. Only the recommended bracketed binary search is
/// implemented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStrategy {
    /// Start at n = 2, double until a size fails, then bisect the bracket.
    #[default]
    Binary,
}

/// Parameters of the GHZ certification benchmark.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GhzConfig {
    /// Additive error of the fidelity estimator. Must satisfy 0 < eps <= 0.05.
    pub eps: f64,
    /// Failure probability of the estimate. Must satisfy 0 < delta <= 0.1.
    pub delta: f64,
    /// Preparation-circuit layout.
    #[serde(default)]
    pub topology: Topology,
    /// Size-search strategy.
    #[serde(default)]
    pub strategy: SearchStrategy,
}

impl GhzConfig {
    /// The loosest admissible accuracy settings with the default fan-out
    /// preparation: eps = 0.05, delta = 0.1.
    pub fn standard() -> GhzConfig {
        GhzConfig {
            eps: 0.05,
            delta: 0.1,
            topology: Topology::FanoutTree,
            strategy: SearchStrategy::Binary,
        }
    }

    pub fn validate(&self) -> Result<(), GhzError> {
        if !self.eps.is_finite() || self.eps <= 0.0 || self.eps > 0.05 {
            return Err(GhzError::Config(format!(
                "eps = {} violates the estimator accuracy rule 0 < eps <= 0.05",
                self.eps
            )));
        }
        if !self.delta.is_finite() || self.delta <= 0.0 || self.delta > 0.1 {
            return Err(GhzError::Config(format!(
                "delta = {} violates the failure probability rule 0 < delta <= 0.1",
                self.delta
            )));
        }
        Ok(())
    }
}
