use serde::{Deserialize, Serialize};

use crate::config::CliffordRBConfig;
use crate::decay::{collect_decay_at, fit_decay, DecayFit, DepthData, StabilizerBackend};
use crate::error::CliffordError;
use crate::metric::{epsilon_mu, search_mu_with, CliffordMetric};

/// One search round: the fraction probed, everything measured at it, the
/// decay fit, and the error-per-layer it implied.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IterationRecord {
    pub mu: f64,
    pub depths: Vec<DepthData>,
    pub fit: DecayFit,
    pub r_mu: f64,
}

/// Full record of a benchmark run: the configuration, the strategies in
/// force, every search round with its circuits and decay data, and the
/// resulting metric.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RbReport {
    pub config: CliffordRBConfig,
    /// How circuits map onto the backend. The simulator executes the gate
    /// list as written, so this is the identity mapping plus moment packing.
    pub transpilation_strategy: String,
    /// How the truncation fraction is updated between rounds.
    pub mu_update_strategy: String,
    pub iterations: Vec<IterationRecord>,
    pub metric: CliffordMetric,
}

/// Run the complete benchmark: search the truncation fraction, recording
/// every round's instances, decay points, fit, and error-per-layer.
pub fn run_rb_search(
    cfg: &CliffordRBConfig,
    backend: &StabilizerBackend,
    master_seed: u64,
) -> Result<RbReport, CliffordError> {
    cfg.validate()?;
    let mut iterations: Vec<IterationRecord> = Vec::new();
    let outcome = search_mu_with(
        |mu, iteration| {
            let depths = collect_decay_at(cfg, mu, backend, master_seed, iteration)?;
            let points: Vec<(usize, f64)> = depths.iter().map(|d| (d.depth, d.f)).collect();
            let fit = fit_decay(&points)?;
            let r_mu = epsilon_mu(fit.p_rc, cfg.n);
            iterations.push(IterationRecord {
                mu,
                depths,
                fit,
                r_mu,
            });
            Ok(r_mu)
        },
        cfg.mu,
        cfg.fail_threshold,
        cfg.slack,
        cfg.mu_tolerance,
    )?;
    Ok(RbReport {
        config: cfg.clone(),
        transpilation_strategy: "identity mapping plus moment packing".to_string(),
        mu_update_strategy: "binary search on the truncation fraction: a failing round halves \
                             toward the best passing fraction, a passing round with headroom \
                             beyond the slack jumps to full depth and then bisects against the \
                             smallest failing fraction, and the search settles once r lands \
                             within the slack window or the bracket closes"
            .to_string(),
        iterations,
        metric: CliffordMetric::from_outcome(cfg.n, outcome),
    })
}

/// The benchmark metric alone (the report without its per-round payload).
pub fn search_mu(
    cfg: &CliffordRBConfig,
    backend: &StabilizerBackend,
    master_seed: u64,
) -> Result<CliffordMetric, CliffordError> {
    Ok(run_rb_search(cfg, backend, master_seed)?.metric)
}
