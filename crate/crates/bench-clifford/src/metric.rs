use serde::{Deserialize, Serialize};

use crate::error::CliffordError;

/// Hard cap on search iterations; the bisection below needs far fewer.
pub const SEARCH_ITERATION_CAP: u64 = 64;

/// Error-per-layer figure of merit at the current truncation fraction:
/// the depolarizing-channel infidelity implied by the fitted decay rate,
/// (4^n - 1) / 4^n * (1 - p_rc).
pub fn epsilon_mu(p_rc: f64, n: usize) -> f64 {
    (1.0 - 4.0_f64.powi(-(n as i32))) * (1.0 - p_rc)
}

/// What to do after measuring r at the current truncation fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchStep {
    ReturnCurrent,
    Decrease,
    Increase,
}

/// The acceptance rule for one search round: fail hard above the threshold,
/// stop at full depth, grow the fraction only when there is more than
/// `slack` of headroom, and otherwise settle.
pub fn step5_decision(r: f64, mu: f64, fail_threshold: f64, slack: f64) -> SearchStep {
    if r > fail_threshold {
        SearchStep::Decrease
    } else if mu >= 1.0 {
        SearchStep::ReturnCurrent
    } else if fail_threshold - r > slack {
        SearchStep::Increase
    } else {
        SearchStep::ReturnCurrent
    }
}

/// Result of the truncation-fraction search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MuSearchOutcome {
    /// Largest fraction that kept r at or below the failure threshold,
    /// or 0 when none did.
    pub mu_max: f64,
    /// r measured at `mu_max` (at the last probed fraction when none passed).
    pub r_mu: f64,
    /// Every (mu, r) pair probed, in order.
    pub trace: Vec<(f64, f64)>,
    /// Set when the search could not find any passing fraction.
    pub diagnostic: Option<String>,
}

/// The benchmark's headline triple: qubit count, the largest truncation
/// fraction whose error-per-layer stayed at or below the failure threshold,
/// and the error-per-layer measured there, plus the full search history.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliffordMetric {
    pub n: usize,
    pub mu_max: f64,
    pub r_mu: f64,
    /// Every (mu, r_mu) pair probed by the search, in order.
    pub trace: Vec<(f64, f64)>,
    /// Set when no probed fraction passed (mu_max = 0).
    pub diagnostic: Option<String>,
}

impl CliffordMetric {
    pub fn from_outcome(n: usize, outcome: MuSearchOutcome) -> CliffordMetric {
        CliffordMetric {
            n,
            mu_max: outcome.mu_max,
            r_mu: outcome.r_mu,
            trace: outcome.trace,
            diagnostic: outcome.diagnostic,
        }
    }
}

/// Bisection search for the largest passing truncation fraction, generic
/// over the measurement so the control flow can be tested without running
/// circuits. `eval(mu, iteration)` must return the r measured at `mu`.
///
/// The bracket is [largest passing mu, smallest failing mu]; a decrease
/// halves toward the best passing point (or 0), an increase first jumps
/// straight to full depth and bisects only after a failure is seen above.
/// The search settles once the bracket is narrower than `tolerance`.
pub fn search_mu_with<E>(
    mut eval: E,
    mu_start: f64,
    fail_threshold: f64,
    slack: f64,
    tolerance: f64,
) -> Result<MuSearchOutcome, CliffordError>
where
    E: FnMut(f64, u64) -> Result<f64, CliffordError>,
{
    let mut trace: Vec<(f64, f64)> = Vec::new();
    let mut best_pass: Option<(f64, f64)> = None;
    let mut lowest_fail: Option<f64> = None;
    let mut mu = mu_start;
    for iteration in 0..SEARCH_ITERATION_CAP {
        let r = eval(mu, iteration)?;
        trace.push((mu, r));
        match step5_decision(r, mu, fail_threshold, slack) {
            SearchStep::ReturnCurrent => {
                return Ok(MuSearchOutcome {
                    mu_max: mu,
                    r_mu: r,
                    trace,
                    diagnostic: None,
                });
            }
            SearchStep::Decrease => {
                lowest_fail = Some(mu);
                let floor = best_pass.map(|(m, _)| m).unwrap_or(0.0);
                let next = 0.5 * (floor + mu);
                if mu - next < tolerance {
                    return Ok(match best_pass {
                        Some((m, rr)) => MuSearchOutcome {
                            mu_max: m,
                            r_mu: rr,
                            trace,
                            diagnostic: None,
                        },
                        None => MuSearchOutcome {
                            mu_max: 0.0,
                            r_mu: r,
                            trace,
                            diagnostic: Some(format!(
                                "no truncation fraction at or below {mu_start} kept r within \
                                 {fail_threshold}; the smallest probed fraction {mu} gave r = {r}"
                            )),
                        },
                    });
                }
                mu = next;
            }
            SearchStep::Increase => {
                best_pass = Some((mu, r));
                match lowest_fail {
                    None => mu = 1.0,
                    Some(ceiling) => {
                        let next = 0.5 * (mu + ceiling);
                        if next - mu < tolerance {
                            return Ok(MuSearchOutcome {
                                mu_max: mu,
                                r_mu: r,
                                trace,
                                diagnostic: None,
                            });
                        }
                        mu = next;
                    }
                }
            }
        }
    }
    Err(CliffordError::SearchStuck(SEARCH_ITERATION_CAP as usize))
}
