use std::f64::consts::E;

use serde::{Deserialize, Serialize};

use crate::error::TfimError;

/// Largest admissible polynomial approximation error for the evolution
/// operator. Runs are only attempted for eps0 at or below this threshold,
/// and the time search declares a candidate time infeasible when even this
/// value fails the acceptance interval.
pub const EPS0_THRESHOLD: f64 = 7e-5;

/// Default lower end of the eps0 bisection bracket.
pub const EPS0_FLOOR: f64 = 1e-7;

/// LCU normalization of the Hamiltonian: the 2L uniform term weights sum to
/// alpha = 2/e, so the encoded block is H / alpha.
pub const ALPHA: f64 = 2.0 / E;

/// Shared strength of the transverse field and the Ising coupling,
/// g = J = 1/(L e). Both are fixed by the benchmark definition so that
/// alpha stays constant across system sizes.
pub fn coupling_strength(l: usize) -> f64 {
    1.0 / (l as f64 * E)
}

/// Number of selection ancillas: m = ceil(log2(2L)), enough to index the 2L
/// Hamiltonian terms.
pub fn ancilla_count(l: usize) -> usize {
    (2 * l).next_power_of_two().trailing_zeros() as usize
}

/// Full register width: L system qubits, m selection ancillas, the QSP
/// phase qubit q_A, and the interferometer qubit q_B.
pub fn total_qubits(l: usize) -> usize {
    l + ancilla_count(l) + 2
}

/// Parameters of the TFIM time-evolution benchmark.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TfimConfig {
    /// Number of spins. Must satisfy l >= 3.
    pub l: usize,
    /// Additive error of the magnetization estimator. Must satisfy
    /// 0 < eps <= 0.01.
    pub eps: f64,
    /// Failure probability of the estimate. Must satisfy 0 < delta <= 0.1.
    pub delta: f64,
    /// Granularity of the evolution-time grid: candidate times are positive
    /// multiples of s. Must satisfy 0 < s <= 0.01.
    pub s: f64,
    /// Largest evolution time the search may probe; bounds the circuit-depth
    /// budget. Must be at least s.
    #[serde(default = "default_t_limit")]
    pub t_limit: f64,
    /// Lower end of the eps0 bisection bracket.
    #[serde(default = "default_eps0_min")]
    pub eps0_min: f64,
    /// Upper end of the eps0 bisection bracket; capped by the 7e-5 threshold.
    #[serde(default = "default_eps0_max")]
    pub eps0_max: f64,
}

fn default_t_limit() -> f64 {
    1.0
}

fn default_eps0_min() -> f64 {
    EPS0_FLOOR
}

fn default_eps0_max() -> f64 {
    EPS0_THRESHOLD
}

impl TfimConfig {
    /// The loosest admissible accuracy settings at the smallest system:
    /// L = 3, eps = 0.01, delta = 0.1, s = 0.01, searching times up to 1.
    pub fn standard() -> TfimConfig {
        TfimConfig {
            l: 3,
            eps: 0.01,
            delta: 0.1,
            s: 0.01,
            t_limit: default_t_limit(),
            eps0_min: default_eps0_min(),
            eps0_max: default_eps0_max(),
        }
    }

    pub fn validate(&self) -> Result<(), TfimError> {
        if self.l < 3 {
            return Err(TfimError::Config(format!(
                "l = {} violates the system size rule l >= 3",
                self.l
            )));
        }
        if !self.eps.is_finite() || self.eps <= 0.0 || self.eps > 0.01 {
            return Err(TfimError::Config(format!(
                "eps = {} violates the estimator accuracy rule 0 < eps <= 0.01",
                self.eps
            )));
        }
        if !self.delta.is_finite() || self.delta <= 0.0 || self.delta > 0.1 {
            return Err(TfimError::Config(format!(
                "delta = {} violates the failure probability rule 0 < delta <= 0.1",
                self.delta
            )));
        }
        if !self.s.is_finite() || self.s <= 0.0 || self.s > 0.01 {
            return Err(TfimError::Config(format!(
                "s = {} violates the time-step precision rule 0 < s <= 0.01",
                self.s
            )));
        }
        if !self.t_limit.is_finite() || self.t_limit < self.s {
            return Err(TfimError::Config(format!(
                "t_limit = {} must be finite and at least the time step s = {}",
                self.t_limit, self.s
            )));
        }
        if !self.eps0_min.is_finite() || self.eps0_min <= 0.0 {
            return Err(TfimError::Config(format!(
                "eps0_min = {} must be positive",
                self.eps0_min
            )));
        }
        if !self.eps0_max.is_finite()
            || self.eps0_max < self.eps0_min
            || self.eps0_max > EPS0_THRESHOLD
        {
            return Err(TfimError::Config(format!(
                "eps0_max = {} must lie in [eps0_min, {EPS0_THRESHOLD}]",
                self.eps0_max
            )));
        }
        Ok(())
    }
}
