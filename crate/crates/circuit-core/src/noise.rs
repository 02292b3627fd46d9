use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::CircuitError;
use crate::gate::Gate;
use crate::pauli::PauliString;

/// A weighted error Pauli in an explicit per-layer distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedPauli {
    pub pauli: PauliString,
    pub weight: f64,
}

/// Stochastic Pauli error drawn once per circuit moment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LayerNoise {
    /// No layer errors.
    None,
    /// Gate-attached depolarizing: after a moment, each single-qubit gate
    /// suffers a uniform non-identity Pauli on its qubit with probability
    /// `p1`, and each multi-qubit gate a uniform non-identity Pauli on its
    /// qubit set with probability `p2`.
    Depolarizing { p1: f64, p2: f64 },
    /// Whole-register depolarizing applied once per moment: with probability
    /// `1 - p` a Pauli drawn uniformly from all 4^N (identity included) hits
    /// the register, which realizes `rho -> p rho + (1 - p) I / 2^N`.
    GlobalDepolarizing { p: f64 },
    /// Explicit weighted list; total weight <= 1, remainder is the identity.
    Explicit { paulis: Vec<WeightedPauli> },
}

/// Noise specification consumed by both simulator backends: a per-moment
/// stochastic Pauli channel plus independent readout bit flips.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoiseModel {
    pub per_layer: LayerNoise,
    /// Per-qubit probability of flipping the measured bit; empty = no flips.
    #[serde(default)]
    pub readout_flip: Vec<f64>,
}

impl NoiseModel {
    pub fn noiseless() -> NoiseModel {
        NoiseModel {
            per_layer: LayerNoise::None,
            readout_flip: Vec::new(),
        }
    }

    pub fn depolarizing(p1: f64, p2: f64) -> NoiseModel {
        NoiseModel {
            per_layer: LayerNoise::Depolarizing { p1, p2 },
            readout_flip: Vec::new(),
        }
    }

    pub fn global_depolarizing(p: f64) -> NoiseModel {
        NoiseModel {
            per_layer: LayerNoise::GlobalDepolarizing { p },
            readout_flip: Vec::new(),
        }
    }

    pub fn with_readout(mut self, per_qubit: Vec<f64>) -> NoiseModel {
        self.readout_flip = per_qubit;
        self
    }

    /// Uniform readout flip probability on all `n` qubits.
    pub fn with_uniform_readout(self, n: usize, r: f64) -> NoiseModel {
        self.with_readout(vec![r; n])
    }

    pub fn is_noiseless(&self) -> bool {
        matches!(self.per_layer, LayerNoise::None) && !self.has_readout()
    }

    pub fn has_layer_noise(&self) -> bool {
        !matches!(self.per_layer, LayerNoise::None)
    }

    pub fn has_readout(&self) -> bool {
        self.readout_flip.iter().any(|&r| r > 0.0)
    }

    /// Check probability ranges and size compatibility with an `n`-qubit
    /// register.
    pub fn validate(&self, n: usize) -> Result<(), CircuitError> {
        let prob = |p: f64| {
            if !(0.0..=1.0).contains(&p) {
                Err(CircuitError::InvalidProbability(p))
            } else {
                Ok(())
            }
        };
        match &self.per_layer {
            LayerNoise::None => {}
            LayerNoise::Depolarizing { p1, p2 } => {
                prob(*p1)?;
                prob(*p2)?;
            }
            LayerNoise::GlobalDepolarizing { p } => prob(*p)?,
            LayerNoise::Explicit { paulis } => {
                let mut total = 0.0;
                for wp in paulis {
                    prob(wp.weight)?;
                    total += wp.weight;
                    if wp.pauli.len() != n {
                        return Err(CircuitError::NoiseSizeMismatch {
                            expected: wp.pauli.len(),
                            got: n,
                        });
                    }
                }
                if total > 1.0 + 1e-12 {
                    return Err(CircuitError::WeightsExceedOne(total));
                }
            }
        }
        if !self.readout_flip.is_empty() && self.readout_flip.len() != n {
            return Err(CircuitError::NoiseSizeMismatch {
                expected: self.readout_flip.len(),
                got: n,
            });
        }
        for &r in &self.readout_flip {
            prob(r)?;
        }
        Ok(())
    }

    /// Draw the error Pauli that follows one moment; `None` means identity.
    /// The draw is made even for empty moments (idle layers still decohere),
    /// except for gate-attached depolarizing which has no gate to attach to.
    pub fn sample_moment_error<R: Rng + ?Sized>(
        &self,
        moment: &[Gate],
        n: usize,
        rng: &mut R,
    ) -> Option<PauliString> {
        match &self.per_layer {
            LayerNoise::None => None,
            LayerNoise::Depolarizing { p1, p2 } => {
                let mut err = PauliString::identity(n);
                let mut hit = false;
                for g in moment {
                    let qubits: Vec<usize> = g.qubits().collect();
                    let p = if qubits.len() == 1 { *p1 } else { *p2 };
                    if p > 0.0 && rng.random::<f64>() < p {
                        hit = true;
                        apply_uniform_nonidentity(&mut err, &qubits, rng);
                    }
                }
                if hit && !err.is_identity_up_to_sign() {
                    Some(err)
                } else {
                    None
                }
            }
            LayerNoise::GlobalDepolarizing { p } => {
                if rng.random::<f64>() < *p {
                    return None;
                }
                let mut err = PauliString::identity(n);
                for i in 0..n {
                    err.set_x_bit(i, rng.random::<bool>());
                    err.set_z_bit(i, rng.random::<bool>());
                }
                if err.is_identity_up_to_sign() {
                    None
                } else {
                    Some(err)
                }
            }
            LayerNoise::Explicit { paulis } => {
                let mut u = rng.random::<f64>();
                for wp in paulis {
                    if u < wp.weight {
                        return Some(wp.pauli.clone());
                    }
                    u -= wp.weight;
                }
                None
            }
        }
    }

    /// Draw the readout flip mask as packed words (empty when flip-free).
    pub fn sample_readout_flips<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        if !self.has_readout() {
            return Vec::new();
        }
        let n = self.readout_flip.len();
        let mut mask = vec![0u64; n.div_ceil(64)];
        for (q, &r) in self.readout_flip.iter().enumerate() {
            if r > 0.0 && rng.random::<f64>() < r {
                mask[q / 64] |= 1 << (q % 64);
            }
        }
        mask
    }
}

/// XOR a uniformly random non-identity Pauli on `qubits` into `err`.
fn apply_uniform_nonidentity<R: Rng + ?Sized>(
    err: &mut PauliString,
    qubits: &[usize],
    rng: &mut R,
) {
    loop {
        let mut any = false;
        let mut draws = Vec::with_capacity(qubits.len());
        for _ in qubits {
            let x = rng.random::<bool>();
            let z = rng.random::<bool>();
            any |= x || z;
            draws.push((x, z));
        }
        if !any {
            continue;
        }
        for (&q, &(x, z)) in qubits.iter().zip(&draws) {
            if x {
                err.set_x_bit(q, !err.x_bit(q));
            }
            if z {
                err.set_z_bit(q, !err.z_bit(q));
            }
        }
        return;
    }
}
