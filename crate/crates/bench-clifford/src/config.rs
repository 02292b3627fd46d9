use serde::{Deserialize, Serialize};

use crate::error::CliffordError;

/// Parameters of the truncated-Clifford benchmark run. The constructor
/// enforces the published parameter rules, so a value of this type is always
/// internally consistent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliffordRBConfig {
    /// Qubit count under test.
    pub n: usize,
    /// Initial circuit fraction in (0, 1].
    pub mu: f64,
    /// Layer depths m_1 < m_2 < ... < m_M.
    pub depths: Vec<usize>,
    /// Number of random instances drawn per depth.
    pub circuits_per_depth: Vec<usize>,
    /// Shots executed per instance.
    pub shots_per_circuit: u64,
    /// Infidelity threshold the search must stay below.
    #[serde(default = "default_fail")]
    pub fail_threshold: f64,
    /// Width of the acceptance window below the threshold.
    #[serde(default = "default_slack")]
    pub slack: f64,
    /// Bracket width in mu at which the search stops refining.
    #[serde(default = "default_mu_tolerance")]
    pub mu_tolerance: f64,
}

fn default_fail() -> f64 {
    0.1
}

fn default_slack() -> f64 {
    0.01
}

fn default_mu_tolerance() -> f64 {
    1.0 / 64.0
}

/// Minimum product of instances and shots per depth.
pub const MIN_EFFECTIVE_SHOTS: u64 = 100_000;

impl CliffordRBConfig {
    pub fn new(
        n: usize,
        mu: f64,
        depths: Vec<usize>,
        circuits_per_depth: Vec<usize>,
        shots_per_circuit: u64,
    ) -> Result<CliffordRBConfig, CliffordError> {
        let cfg = CliffordRBConfig {
            n,
            mu,
            depths,
            circuits_per_depth,
            shots_per_circuit,
            fail_threshold: default_fail(),
            slack: default_slack(),
            mu_tolerance: default_mu_tolerance(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// The recommended small configuration: two depths {2, 8}, 100 circuits
    /// per depth, 1000 shots each.
    pub fn standard(n: usize, mu: f64) -> Result<CliffordRBConfig, CliffordError> {
        CliffordRBConfig::new(n, mu, vec![2, 8], vec![100, 100], 1000)
    }

    pub fn validate(&self) -> Result<(), CliffordError> {
        let fail = |msg: String| Err(CliffordError::Config(msg));
        if self.n == 0 {
            return fail("qubit count must be positive".into());
        }
        if !(self.mu > 0.0 && self.mu <= 1.0) {
            return fail(format!("mu = {} violates 0 < mu <= 1", self.mu));
        }
        if self.depths.len() < 2 {
            return fail(format!("M = {} violates M >= 2", self.depths.len()));
        }
        if self.depths[0] == 0 {
            return fail("depths must be positive integers".into());
        }
        if !self.depths.windows(2).all(|w| w[0] < w[1]) {
            return fail(format!(
                "depths {:?} violate m_i < m_j for i < j",
                self.depths
            ));
        }
        let spread = self.depths[self.depths.len() - 1] - self.depths[0];
        if spread < 3 {
            return fail(format!(
                "depth spread {spread} violates m_M - m_1 >= 3"
            ));
        }
        if self.circuits_per_depth.len() != self.depths.len() {
            return fail(format!(
                "{} circuit counts for {} depths",
                self.circuits_per_depth.len(),
                self.depths.len()
            ));
        }
        for (&m, &ni) in self.depths.iter().zip(&self.circuits_per_depth) {
            if ni == 0 {
                return fail(format!("zero instances requested at depth {m}"));
            }
            let effective = ni as u64 * self.shots_per_circuit;
            if effective < MIN_EFFECTIVE_SHOTS {
                return fail(format!(
                    "n_i * l = {effective} at depth {m} violates n_i * l >= 10^5"
                ));
            }
        }
        if !(self.fail_threshold > 0.0 && self.fail_threshold < 1.0) {
            return fail(format!(
                "fail threshold {} outside (0, 1)",
                self.fail_threshold
            ));
        }
        if !(self.slack > 0.0 && self.slack < self.fail_threshold) {
            return fail(format!(
                "slack {} must lie in (0, fail threshold)",
                self.slack
            ));
        }
        if !(self.mu_tolerance > 0.0 && self.mu_tolerance < 1.0) {
            return fail(format!(
                "mu tolerance {} outside (0, 1)",
                self.mu_tolerance
            ));
        }
        Ok(())
    }
}
