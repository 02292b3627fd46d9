//! Dense 2x2 oracles for the signal-processing tests: build the phased
//! unitary products directly and read the realized polynomial off the
//! top-left entry.

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use num_complex::Complex64;

pub type Mat2 = [[Complex64; 2]; 2];

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// exp(i phi Z) = diag(e^{i phi}, e^{-i phi}).
pub fn z_phase(phi: f64) -> Mat2 {
    let zero = Complex64::new(0.0, 0.0);
    [
        [Complex64::from_polar(1.0, phi), zero],
        [zero, Complex64::from_polar(1.0, -phi)],
    ]
}

/// Signal operator in the W convention: [[x, i s], [i s, x]] with
/// s = sqrt(1 - x^2).
pub fn w_op(x: f64) -> Mat2 {
    let s = (1.0 - x * x).max(0.0).sqrt();
    [
        [Complex64::new(x, 0.0), Complex64::new(0.0, s)],
        [Complex64::new(0.0, s), Complex64::new(x, 0.0)],
    ]
}

/// Signal operator in the reflection convention: [[x, s], [s, -x]].
pub fn r_op(x: f64) -> Mat2 {
    let s = (1.0 - x * x).max(0.0).sqrt();
    [
        [Complex64::new(x, 0.0), Complex64::new(s, 0.0)],
        [Complex64::new(s, 0.0), Complex64::new(-x, 0.0)],
    ]
}

fn phased_product(phases: &[f64], signal: &Mat2) -> Mat2 {
    let mut u = z_phase(phases[0]);
    for &p in &phases[1..] {
        u = mat_mul(&mat_mul(&u, signal), &z_phase(p));
    }
    u
}

/// Im<0|U_W(x)|0> for the interleaved W-convention product.
pub fn w_value(phases: &[f64], x: f64) -> f64 {
    phased_product(phases, &w_op(x))[0][0].im
}

/// Re<0|U_R(x)|0> for the interleaved reflection-convention product.
pub fn r_value(phases: &[f64], x: f64) -> f64 {
    phased_product(phases, &r_op(x))[0][0].re
}
