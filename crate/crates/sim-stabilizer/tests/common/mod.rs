// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use circuit_core::{Circuit, Gate, PauliOp, PauliString};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::FRAC_PI_2;

/// Dense matrix of a signed Pauli string, qubit 0 as the most significant
/// factor (matching the statevector bit convention).
pub fn pauli_dense(p: &PauliString) -> DMatrix<Complex64> {
    let o = Complex64::new(1.0, 0.0);
    let z = Complex64::new(0.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let factor = |op: PauliOp| match op {
        PauliOp::I => DMatrix::from_row_slice(2, 2, &[o, z, z, o]),
        PauliOp::X => DMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        PauliOp::Y => DMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        PauliOp::Z => DMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
    };
    let sign = Complex64::new(p.sign() as f64, 0.0);
    let mut m = DMatrix::from_element(1, 1, sign);
    for q in 0..p.len() {
        m = m.kronecker(&factor(p.op(q)));
    }
    m
}

pub fn max_abs_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    (a - b).iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Random non-identity Pauli string with a random sign.
pub fn random_pauli<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PauliString {
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
        if rng.random() {
            p.set_sign(-1);
        }
        return p;
    }
}

/// Random gate from the Clifford-expressible alphabet, including rotations
/// at multiples of pi/2 and Euler triples.
pub fn random_clifford_gate<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Gate {
    let q = rng.random_range(0..n);
    let angle = |rng: &mut R| FRAC_PI_2 * rng.random_range(-4..=4i32) as f64;
    let pair = |rng: &mut R| {
        let a = rng.random_range(0..n);
        let mut b = rng.random_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        (a, b)
    };
    let variants = if n >= 2 { 13 } else { 10 };
    match rng.random_range(0..variants) {
        0 => Gate::h(q),
        1 => Gate::s(q),
        2 => Gate::sdg(q),
        3 => Gate::x(q),
        4 => Gate::y(q),
        5 => Gate::z(q),
        6 => Gate::rx(q, angle(rng)),
        7 => Gate::ry(q, angle(rng)),
        8 => Gate::rz(q, angle(rng)),
        9 => Gate::euler(q, angle(rng), angle(rng), angle(rng)),
        10 => {
            let (a, b) = pair(rng);
            Gate::cx(a, b)
        }
        11 => {
            let (a, b) = pair(rng);
            Gate::cz(a, b)
        }
        _ => {
            let (a, b) = pair(rng);
            Gate::swap(a, b)
        }
    }
}

pub fn random_clifford_circuit<R: Rng + ?Sized>(n: usize, gates: usize, rng: &mut R) -> Circuit {
    let mut c = Circuit::new(n);
    for _ in 0..gates {
        c.push(random_clifford_gate(n, rng)).unwrap();
    }
    c
}
