use std::collections::HashMap;

use circuit_core::{Circuit, NoiseModel, PauliString};
use rand::Rng;

use crate::error::SimError;
use crate::state::StateVector;

/// Sampled measurement outcomes as counts per basis index.
///
/// Noise is realized by Pauli trajectories: one error pattern is drawn per
/// shot (a Pauli after each moment), shots sharing a pattern reuse a single
/// state simulation, and readout flips are applied per shot. The noiseless
/// distribution therefore costs one circuit pass regardless of shot count.
pub fn sample_counts<R: Rng + ?Sized>(
    c: &Circuit,
    noise: &NoiseModel,
    shots: u64,
    rng: &mut R,
) -> Result<HashMap<u64, u64>, SimError> {
    let n = c.qubit_count();
    noise.validate(n)?;

    // Pass 1: one trajectory per shot, deduplicated preserving first-seen
    // order so the rng stream stays independent of hashing.
    type Pattern = Vec<(usize, PauliString)>;
    let mut patterns: Vec<Pattern> = Vec::new();
    let mut index_of: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut shots_per: Vec<u64> = Vec::new();
    if noise.has_layer_noise() {
        for _ in 0..shots {
            let mut pat: Pattern = Vec::new();
            for (m, moment) in c.moments().iter().enumerate() {
                if let Some(e) = noise.sample_moment_error(moment, n, rng) {
                    pat.push((m, e));
                }
            }
            let key = pattern_key(&pat);
            match index_of.get(&key) {
                Some(&ix) => shots_per[ix] += 1,
                None => {
                    index_of.insert(key, patterns.len());
                    patterns.push(pat);
                    shots_per.push(1);
                }
            }
        }
    } else {
        patterns.push(Vec::new());
        shots_per.push(shots);
    }

    // Pass 2: simulate each unique trajectory and sample its shots.
    let mut counts: HashMap<u64, u64> = HashMap::new();
    for (pat, &k) in patterns.iter().zip(&shots_per) {
        let err_at: HashMap<usize, &PauliString> = pat.iter().map(|(m, p)| (*m, p)).collect();
        let mut s = StateVector::zero(n);
        for (m, moment) in c.moments().iter().enumerate() {
            for gate in moment {
                s.apply_gate(gate)?;
            }
            if let Some(e) = err_at.get(&m) {
                s.apply_pauli(e)?;
            }
        }
        let cdf = cumulative(&s);
        for _ in 0..k {
            let mut outcome = draw(&cdf, rng);
            let flips = noise.sample_readout_flips(rng);
            if let Some(&word) = flips.first() {
                // Flip words are qubit-indexed; remap to index-bit positions
                // (registers on this backend fit one word).
                for q in 0..n {
                    if word >> q & 1 == 1 {
                        outcome ^= 1 << (n - 1 - q);
                    }
                }
            }
            *counts.entry(outcome).or_insert(0) += 1;
        }
    }
    Ok(counts)
}

/// `shots` computational-basis samples in draw order, each rendered with the
/// qubit-0 bit first (e.g. "011" = qubit 0 read 0, qubits 1 and 2 read 1).
pub fn sample_bitstrings<R: Rng + ?Sized>(
    c: &Circuit,
    noise: &NoiseModel,
    shots: u64,
    rng: &mut R,
) -> Result<Vec<String>, SimError> {
    let n = c.qubit_count();
    let counts = sample_counts(c, noise, shots, rng)?;
    let mut out = Vec::with_capacity(shots as usize);
    for (index, k) in counts {
        for _ in 0..k {
            out.push(format_bitstring(index, n));
        }
    }
    out.sort();
    Ok(out)
}

pub fn format_bitstring(index: u64, n: usize) -> String {
    (0..n)
        .map(|q| {
            if index >> (n - 1 - q) & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

fn pattern_key(pat: &[(usize, PauliString)]) -> Vec<u8> {
    let mut key = Vec::new();
    for (m, p) in pat {
        key.extend_from_slice(&(*m as u64).to_le_bytes());
        key.extend_from_slice(p.to_string().as_bytes());
    }
    key
}

fn cumulative(s: &StateVector) -> Vec<f64> {
    let mut acc = 0.0;
    let mut cdf = Vec::with_capacity(s.amplitudes().len());
    for a in s.amplitudes() {
        acc += a.norm_sqr();
        cdf.push(acc);
    }
    // Guard against rounding drift so the final bin always catches u < 1.
    if let Some(last) = cdf.last_mut() {
        *last = f64::max(*last, 1.0);
    }
    cdf
}

fn draw<R: Rng + ?Sized>(cdf: &[f64], rng: &mut R) -> u64 {
    let u = rng.random::<f64>();
    cdf.partition_point(|&c| c <= u) as u64
}
