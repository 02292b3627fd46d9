use circuit_core::rng::derive_rng;
use circuit_core::{threads, NoiseModel};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sim_stabilizer::run_pauli_measurement;

use crate::config::CliffordRBConfig;
use crate::error::CliffordError;
use crate::layers::{build_rb_instance, RbInstance};

/// Measurement backend: the stabilizer engine under a Pauli noise model.
#[derive(Debug, Clone)]
pub struct StabilizerBackend {
    pub noise: NoiseModel,
}

impl StabilizerBackend {
    pub fn noiseless() -> StabilizerBackend {
        StabilizerBackend {
            noise: NoiseModel::noiseless(),
        }
    }

    pub fn with_noise(noise: NoiseModel) -> StabilizerBackend {
        StabilizerBackend { noise }
    }
}

/// Everything measured at one depth: the per-instance shot means and their
/// average f, plus the instances themselves for reporting.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DepthData {
    pub depth: usize,
    /// Mean of the per-instance means.
    pub f: f64,
    /// Per-instance shot means alpha_j.
    pub alphas: Vec<f64>,
    pub instances: Vec<RbInstance>,
}

/// Run the full data-collection pass: for every configured depth, draw the
/// configured number of instances, execute each for the configured shots,
/// and average. Instances run in parallel on the shared pool; every instance
/// draws from its own counter-derived stream, so results do not depend on
/// scheduling.
pub fn collect_decay(
    cfg: &CliffordRBConfig,
    backend: &StabilizerBackend,
    master_seed: u64,
    search_iteration: u64,
) -> Result<Vec<DepthData>, CliffordError> {
    collect_decay_at(cfg, cfg.mu, backend, master_seed, search_iteration)
}

/// As `collect_decay`, at an explicit mu (the search loop varies mu away
/// from the configured starting point).
pub fn collect_decay_at(
    cfg: &CliffordRBConfig,
    mu: f64,
    backend: &StabilizerBackend,
    master_seed: u64,
    search_iteration: u64,
) -> Result<Vec<DepthData>, CliffordError> {
    cfg.validate()?;
    if !(mu > 0.0 && mu <= 1.0) {
        return Err(CliffordError::Config(format!(
            "mu = {mu} violates 0 < mu <= 1"
        )));
    }
    backend
        .noise
        .validate(cfg.n)
        .map_err(CliffordError::Circuit)?;
    threads::pool().install(|| {
        cfg.depths
            .iter()
            .zip(&cfg.circuits_per_depth)
            .enumerate()
            .map(|(depth_idx, (&depth, &instances))| {
                let runs: Vec<(f64, RbInstance)> = (0..instances)
                    .into_par_iter()
                    .map(|j| -> Result<(f64, RbInstance), CliffordError> {
                        let mut rng = derive_rng(
                            master_seed,
                            "clifford",
                            &[search_iteration, depth_idx as u64, j as u64],
                        );
                        let instance = build_rb_instance(cfg.n, mu, depth, &mut rng)?;
                        let outcomes = run_pauli_measurement(
                            &instance.circuit,
                            &instance.observable,
                            &backend.noise,
                            cfg.shots_per_circuit,
                            &mut rng,
                        )
                        .map_err(|source| CliffordError::Backend {
                            depth,
                            instance: j,
                            source,
                        })?;
                        let alpha = outcomes.iter().map(|&v| v as f64).sum::<f64>()
                            / outcomes.len() as f64;
                        Ok((alpha, instance))
                    })
                    .collect::<Result<_, _>>()?;
                let alphas: Vec<f64> = runs.iter().map(|(a, _)| *a).collect();
                let f = alphas.iter().sum::<f64>() / alphas.len() as f64;
                Ok(DepthData {
                    depth,
                    f,
                    alphas,
                    instances: runs.into_iter().map(|(_, i)| i).collect(),
                })
            })
            .collect()
    })
}

/// Exponential decay fit f = A p^m via least squares on (m, log f).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayFit {
    pub a: f64,
    /// Fitted decay rate, clamped to (0, 1].
    pub p_rc: f64,
    /// True when the unclamped rate exceeded 1.
    pub clamped: bool,
    /// Points with f <= 0 are unusable in the log domain and are dropped.
    pub dropped_nonpositive: usize,
    /// Log-domain residuals of the used points.
    pub residuals: Vec<f64>,
    /// The (depth, f) pairs actually used.
    pub points: Vec<(f64, f64)>,
}

pub fn fit_decay(points: &[(usize, f64)]) -> Result<DecayFit, CliffordError> {
    let usable: Vec<(f64, f64)> = points
        .iter()
        .filter(|(_, f)| *f > 0.0)
        .map(|&(m, f)| (m as f64, f))
        .collect();
    let dropped = points.len() - usable.len();
    if usable.len() < 2 {
        return Err(CliffordError::FitUnderdetermined {
            usable: usable.len(),
        });
    }
    let n = usable.len() as f64;
    let sx: f64 = usable.iter().map(|(m, _)| m).sum();
    let sy: f64 = usable.iter().map(|(_, f)| f.ln()).sum();
    let sxx: f64 = usable.iter().map(|(m, _)| m * m).sum();
    let sxy: f64 = usable.iter().map(|(m, f)| m * f.ln()).sum();
    let denom = n * sxx - sx * sx;
    if denom == 0.0 {
        // All usable points share one depth, so the slope is undetermined.
        return Err(CliffordError::FitUnderdetermined { usable: 1 });
    }
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    let residuals = usable
        .iter()
        .map(|(m, f)| f.ln() - (intercept + slope * m))
        .collect();
    let raw_p = slope.exp();
    let clamped = raw_p > 1.0;
    Ok(DecayFit {
        a: intercept.exp(),
        p_rc: if clamped { 1.0 } else { raw_p },
        clamped,
        dropped_nonpositive: dropped,
        residuals,
        points: usable,
    })
}
