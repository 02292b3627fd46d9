use circuit_core::{Circuit, PauliString};
use rand::Rng;
use sim_stabilizer::StabilizerTableau;

use crate::circuits::ghz_circuit;
use crate::config::Topology;
use crate::error::GhzError;

/// Number of single-shot Pauli measurements needed for an additive-error
/// `eps` fidelity estimate failing with probability at most `delta`:
/// ceil(8 ln(4/delta) / eps^2).
pub fn dfe_sample_count(eps: f64, delta: f64) -> u64 {
    ((8.0 * (4.0 / delta).ln()) / (eps * eps)).ceil() as u64
}

/// Draw the measurement plan for direct fidelity estimation of the n-qubit
/// GHZ state: `dfe_sample_count(eps, delta)` Pauli strings sampled uniformly
/// from the nonidentity stabilizers of the state.
///
/// Each draw picks a nonzero Z/I mask uniformly at random and conjugates it
/// through the preparation circuit, so every returned string stabilizes the
/// state (+1 expectation) and the identity is never returned. The stabilizer
/// group depends only on the prepared state, not on the fan-out layout, so
/// the default preparation is used for the conjugation.
pub fn sample_dfe_paulis<R: Rng + ?Sized>(
    n: usize,
    eps: f64,
    delta: f64,
    rng: &mut R,
) -> Result<Vec<PauliString>, GhzError> {
    let prep = ghz_circuit(n, Topology::default())?;
    sample_dfe_paulis_through(&prep, eps, delta, rng)
}

/// As `sample_dfe_paulis`, conjugating through the given preparation circuit.
pub fn sample_dfe_paulis_through<R: Rng + ?Sized>(
    prep: &Circuit,
    eps: f64,
    delta: f64,
    rng: &mut R,
) -> Result<Vec<PauliString>, GhzError> {
    if !eps.is_finite() || eps <= 0.0 || eps > 0.05 {
        return Err(GhzError::Config(format!(
            "eps = {eps} violates the estimator accuracy rule 0 < eps <= 0.05"
        )));
    }
    if !delta.is_finite() || delta <= 0.0 || delta > 0.1 {
        return Err(GhzError::Config(format!(
            "delta = {delta} violates the failure probability rule 0 < delta <= 0.1"
        )));
    }
    let n = prep.qubit_count();
    let tableau = StabilizerTableau::from_circuit(prep)?;
    let count = dfe_sample_count(eps, delta);
    let mut out = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let mask = random_nonzero_mask(n, rng);
        let words = mask.len();
        let diagonal = PauliString::from_parts(n, false, vec![0; words], mask);
        out.push(tableau.image(&diagonal)?);
    }
    Ok(out)
}

/// Uniform nonzero n-bit mask, packed into 64-bit words.
fn random_nonzero_mask<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<u64> {
    let words = n.div_ceil(64);
    let top_bits = n - 64 * (words - 1);
    let top_mask = if top_bits == 64 {
        u64::MAX
    } else {
        (1u64 << top_bits) - 1
    };
    loop {
        let mut mask: Vec<u64> = (0..words).map(|_| rng.random()).collect();
        mask[words - 1] &= top_mask;
        if mask.iter().any(|&w| w != 0) {
            return mask;
        }
    }
}
