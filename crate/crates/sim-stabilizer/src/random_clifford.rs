//! Uniform sampling from the n-qubit Clifford group, emitted as a circuit.
//!
//! Implements the canonical-form sampler of Bravyi and Maslov
//! (arXiv:2003.09412): draw a quantum-Mallows layer pattern plus two random
//! Hadamard-free group elements, then synthesize
//! `F2 → SWAP(σ) → H(h) → F1 → random Pauli layer` where the Pauli layer
//! realizes the 2n uniform phase bits.

use circuit_core::{Circuit, Gate};
use rand::Rng;

/// Square bit matrix, row-major.
#[derive(Clone)]
struct BitMat {
    n: usize,
    bits: Vec<bool>,
}

impl BitMat {
    fn zeros(n: usize) -> BitMat {
        BitMat {
            n,
            bits: vec![false; n * n],
        }
    }

    fn eye(n: usize) -> BitMat {
        let mut m = BitMat::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.n + c]
    }

    fn set(&mut self, r: usize, c: usize, v: bool) {
        self.bits[r * self.n + c] = v;
    }
}

/// Quantum-Mallows sample: per-qubit Hadamard flags and a permutation.
fn sample_qmallows<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (Vec<bool>, Vec<usize>) {
    let mut had = vec![false; n];
    let mut perm = vec![0usize; n];
    let mut inds: Vec<usize> = (0..n).collect();
    for i in 0..n {
        let m = n - i;
        let eps = 4f64.powi(-(m as i32));
        let r: f64 = rng.random();
        let index = (-(r + (1.0 - r) * eps).log2().ceil()) as usize;
        // r == 0 collapses to the boundary; clamp into the valid range.
        let index = index.min(2 * m - 1);
        had[i] = index < m;
        let k = if index < m { index } else { 2 * m - index - 1 };
        perm[i] = inds.remove(k);
    }
    (had, perm)
}

/// Random symmetric matrix (Γ) or unit-lower-triangular matrix (Δ).
fn sample_gamma<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BitMat {
    let mut m = BitMat::zeros(n);
    for i in 0..n {
        m.set(i, i, rng.random());
        for j in 0..i {
            let b: bool = rng.random();
            m.set(i, j, b);
            m.set(j, i, b);
        }
    }
    m
}

fn sample_delta<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BitMat {
    let mut m = BitMat::eye(n);
    for i in 0..n {
        for j in 0..i {
            m.set(i, j, rng.random());
        }
    }
    m
}

/// Gates realizing the linear map `x ↦ Δx` on X images: one CX per
/// below-diagonal one, emitted column-major from the last column down so the
/// elementary factors compose to Δ exactly.
fn cx_network(delta: &BitMat, gates: &mut Vec<Gate>) {
    let n = delta.n;
    for j in (0..n).rev() {
        for i in j + 1..n {
            if delta.get(i, j) {
                gates.push(Gate::cx(j, i));
            }
        }
    }
}

/// A Hadamard-free element: CX network for Δ, then the quadratic part of Γ
/// as S gates (diagonal) and CZ gates (off-diagonal).
fn hadamard_free(gamma: &BitMat, delta: &BitMat, gates: &mut Vec<Gate>) {
    cx_network(delta, gates);
    let n = gamma.n;
    for i in 0..n {
        if gamma.get(i, i) {
            gates.push(Gate::s(i));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if gamma.get(i, j) {
                gates.push(Gate::cz(i, j));
            }
        }
    }
}

/// SWAP gates after which the operator on qubit q sits on qubit σ(q).
fn permutation_swaps(sigma: &[usize], gates: &mut Vec<Gate>) {
    let n = sigma.len();
    let mut cur: Vec<usize> = (0..n).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    let mut want = vec![0usize; n];
    for q in 0..n {
        want[sigma[q]] = q;
    }
    for slot in 0..n {
        let q = want[slot];
        if cur[slot] != q {
            let other = pos[q];
            gates.push(Gate::swap(slot, other));
            let (a, b) = (cur[slot], cur[other]);
            cur[slot] = b;
            cur[other] = a;
            pos[a] = other;
            pos[b] = slot;
        }
    }
}

/// Draw a uniformly random element of the n-qubit Clifford group and return
/// a circuit implementing it.
pub fn random_clifford<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Circuit {
    assert!(n > 0, "need at least one qubit");
    let (had, perm) = sample_qmallows(n, rng);
    let gamma1 = sample_gamma(n, rng);
    let gamma2 = sample_gamma(n, rng);
    let delta1 = sample_delta(n, rng);
    let delta2 = sample_delta(n, rng);

    let mut sigma = vec![0usize; n];
    for (i, &p) in perm.iter().enumerate() {
        sigma[p] = i;
    }

    let mut gates = Vec::new();
    hadamard_free(&gamma2, &delta2, &mut gates);
    permutation_swaps(&sigma, &mut gates);
    for (i, &h) in had.iter().enumerate() {
        if h {
            gates.push(Gate::h(i));
        }
    }
    hadamard_free(&gamma1, &delta1, &mut gates);

    let mut circuit = Circuit::new(n);
    for gate in gates {
        circuit
            .push(gate)
            .expect("synthesized Clifford gates are valid");
    }
    // Uniform random Pauli layer: realizes the 2n sign bits of the element.
    for q in 0..n {
        let gate = match rng.random_range(0..4u8) {
            1 => Gate::x(q),
            2 => Gate::y(q),
            3 => Gate::z(q),
            _ => continue,
        };
        circuit.push(gate).expect("single-qubit gate is valid");
    }
    circuit
}
