use circuit_core::{basis_change_layer, concat, Circuit, PauliOp, PauliString};
use rand::Rng;
use serde::{Deserialize, Serialize};
use sim_stabilizer::{conjugate_pauli, random_clifford, stabilizer_product_state_prep};

use crate::error::CliffordError;

/// Provenance of one mu-fraction layer, kept for reporting: the untruncated
/// source circuit, its depth, and the extracted window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MuLayerMeta {
    /// The sampled Clifford as a circuit, before any truncation.
    pub pre_truncation: Circuit,
    pub source_depth: usize,
    /// First moment of the extracted window.
    pub start: usize,
    /// Number of moments kept.
    pub window: usize,
}

/// Draw a random Clifford on `n` qubits, pick a uniformly random window
/// start s in [0, floor(d(1-mu))], and keep the contiguous floor(d*mu)
/// moments from s. A depth-0 window (possible when the source is shallow
/// and mu is small) is returned as an empty layer.
pub fn make_mu_layer<R: Rng + ?Sized>(
    n: usize,
    mu: f64,
    rng: &mut R,
) -> Result<(Circuit, MuLayerMeta), CliffordError> {
    let source = random_clifford(n, rng);
    let d = source.depth();
    let max_start = ((d as f64) * (1.0 - mu) + 1e-9).floor() as usize;
    let start = if max_start == 0 {
        0
    } else {
        rng.random_range(0..=max_start)
    };
    let layer = source.truncate_fraction(mu, start)?;
    let meta = MuLayerMeta {
        source_depth: d,
        start,
        window: layer.depth(),
        pre_truncation: source,
    };
    Ok((layer, meta))
}

/// Uniformly random signed Pauli string on `n` qubits, excluding both signs
/// of the identity.
pub fn random_signed_pauli<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PauliString {
    loop {
        let mut p = PauliString::identity(n);
        for q in 0..n {
            let op = match rng.random_range(0..4u8) {
                0 => PauliOp::I,
                1 => PauliOp::X,
                2 => PauliOp::Y,
                _ => PauliOp::Z,
            };
            p.set_op(q, op);
        }
        if p.is_identity_up_to_sign() {
            continue;
        }
        if rng.random_bool(0.5) {
            p.negate();
        }
        return p;
    }
}

/// One benchmark circuit ready to run, together with the diagonal observable
/// whose eigenvalues are the protocol's shot outcomes and the per-layer
/// provenance for reporting.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RbInstance {
    /// Initial signed Pauli P.
    pub pauli: PauliString,
    /// Prep layer, the mu-fraction layers, and the final basis change,
    /// concatenated in execution order.
    pub circuit: Circuit,
    /// The conjugated Pauli after the basis change: a signed product of Z
    /// and I factors.
    pub observable: PauliString,
    pub layers: Vec<MuLayerMeta>,
}

/// Build one instance at the given layer count: sample the signed Pauli P
/// and a random product stabilizer state it stabilizes, apply `layer_count`
/// mu-fraction layers, and close with the single-qubit layer that rotates
/// the conjugated Pauli onto the computational basis.
pub fn build_rb_instance<R: Rng + ?Sized>(
    n: usize,
    mu: f64,
    layer_count: usize,
    rng: &mut R,
) -> Result<RbInstance, CliffordError> {
    let pauli = random_signed_pauli(n, rng);
    let prep = stabilizer_product_state_prep(&pauli, rng)?;
    let mut circuit = prep;
    let mut conjugated = pauli.clone();
    let mut layers = Vec::with_capacity(layer_count);
    for _ in 0..layer_count {
        let (layer, meta) = make_mu_layer(n, mu, rng)?;
        conjugated = conjugate_pauli(&layer, &conjugated)?;
        circuit = concat(&circuit, &layer)?;
        layers.push(meta);
    }
    let final_layer = basis_change_layer(&conjugated);
    let observable = conjugate_pauli(&final_layer, &conjugated)?;
    circuit = concat(&circuit, &final_layer)?;
    debug_assert!(observable.is_diagonal());
    Ok(RbInstance {
        pauli,
        circuit,
        observable,
        layers,
    })
}
