use circuit_core::rng::derive_rng;
use circuit_core::NoiseModel;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::circuits::ghz_circuit;
use crate::config::GhzConfig;
use crate::error::GhzError;
use crate::estimate::{dfe_estimate, GhzBackend};
use crate::sampling::{dfe_sample_count, sample_dfe_paulis_through};

/// Certification criterion: the estimate minus its allowed error must leave
/// the fidelity strictly above 1/2.
pub fn passes(y: f64, eps: f64) -> bool {
    y - eps > 0.5
}

/// Outcome of certifying one candidate size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SizeRecord {
    pub n: usize,
    /// Number of single-shot Pauli measurements behind `y`.
    pub sample_count: u64,
    /// Fidelity estimate Y.
    pub y: f64,
    pub pass: bool,
}

/// Result of the size search: every certification attempted, in execution
/// order, and the largest passing size (0 when none passed).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GhzResult {
    pub records: Vec<SizeRecord>,
    pub n_max: usize,
    pub diagnostic: Option<String>,
}

/// Find the largest GHZ size in [2, n_limit] that the device certifies.
///
/// Sizes are probed with a bracketed binary search: start at n = 2, double
/// until a size fails (capping at `n_limit`), then bisect between the largest
/// pass and the smallest failure. Per-size sampling and estimation use RNG
/// streams derived from a seed drawn from `rng`, so a given size is evaluated
/// identically wherever it lands in the search order.
pub fn search_max_n<R: Rng + ?Sized>(
    cfg: &GhzConfig,
    n_limit: usize,
    backend: GhzBackend,
    noise: &NoiseModel,
    rng: &mut R,
) -> Result<GhzResult, GhzError> {
    cfg.validate()?;
    let master: u64 = rng.random();
    let sample_count = dfe_sample_count(cfg.eps, cfg.delta);
    search_max_n_with(
        |n| {
            let prep = ghz_circuit(n, cfg.topology)?;
            let mut pauli_rng = derive_rng(master, "ghz-paulis", &[n as u64]);
            let paulis = sample_dfe_paulis_through(&prep, cfg.eps, cfg.delta, &mut pauli_rng)?;
            let mut shot_rng = derive_rng(master, "ghz-shots", &[n as u64]);
            let y = dfe_estimate(&prep, &paulis, noise, backend, &mut shot_rng)?;
            Ok(SizeRecord {
                n,
                sample_count,
                y,
                pass: passes(y, cfg.eps),
            })
        },
        n_limit,
    )
}

/// Size-search skeleton with an injectable evaluator, for testing the
/// bracketing logic against scripted devices.
pub fn search_max_n_with<E>(mut eval: E, n_limit: usize) -> Result<GhzResult, GhzError>
where
    E: FnMut(usize) -> Result<SizeRecord, GhzError>,
{
    if n_limit < 2 {
        return Err(GhzError::Config(format!(
            "size search needs n_limit >= 2, got {n_limit}"
        )));
    }
    let mut records: Vec<SizeRecord> = Vec::new();
    let mut best_pass = 0;
    let mut first_fail = None;
    let mut n = 2;
    loop {
        let record = eval(n)?;
        let pass = record.pass;
        records.push(record);
        if !pass {
            first_fail = Some(n);
            break;
        }
        best_pass = n;
        if n == n_limit {
            break;
        }
        n = (n * 2).min(n_limit);
    }
    if best_pass == 0 {
        let y = records[0].y;
        return Ok(GhzResult {
            records,
            n_max: 0,
            diagnostic: Some(format!(
                "no size in [2, {n_limit}] was certified; n = 2 gave Y = {y:.4}, \
                 and certification needs Y - eps > 1/2"
            )),
        });
    }
    if let Some(mut hi) = first_fail {
        let mut lo = best_pass;
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            let record = eval(mid)?;
            let pass = record.pass;
            records.push(record);
            if pass {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        best_pass = lo;
    }
    Ok(GhzResult {
        records,
        n_max: best_pass,
        diagnostic: None,
    })
}
