use approx::assert_abs_diff_eq;
use qsp_numerics::{bessel_j, lambert_w, QspError};

/// Reference values computed with an independent arbitrary-precision
/// evaluation (mpmath/scipy agree to all printed digits).
const OMEGA: f64 = 0.567_143_290_409_783_8; // W(1)
const J0_OF_1: f64 = 0.765_197_686_557_966_6;
const J1_OF_1: f64 = 0.440_050_585_744_933_5;
const J5_OF_10: f64 = -0.234_061_528_186_793_64;

#[test]
fn lambert_fixed_points() {
    assert_eq!(lambert_w(0.0).unwrap(), 0.0);
    assert_abs_diff_eq!(lambert_w(std::f64::consts::E).unwrap(), 1.0, epsilon = 1e-14);
    assert_abs_diff_eq!(lambert_w(1.0).unwrap(), OMEGA, epsilon = 1e-14);
}

#[test]
fn lambert_branch_point() {
    let w = lambert_w(-1.0 / std::f64::consts::E).unwrap();
    assert!(w.is_finite());
    assert_abs_diff_eq!(w, -1.0, epsilon = 1e-6);
}

#[test]
fn lambert_satisfies_defining_identity() {
    for i in 0..=240 {
        let x = 10f64.powf(-6.0 + i as f64 * 0.05);
        let w = lambert_w(x).unwrap();
        assert!(
            (w * w.exp() - x).abs() <= 1e-12 * x.max(1.0),
            "identity violated at x = {x}: w = {w}"
        );
    }
}

#[test]
fn lambert_negative_arguments() {
    for &x in &[-0.05, -0.2, -0.3, -0.36, -0.3678] {
        let w = lambert_w(x).unwrap();
        assert!(w > -1.0 - 1e-12 && w < 0.0);
        assert_abs_diff_eq!(w * w.exp(), x, epsilon = 1e-12);
    }
}

#[test]
fn lambert_rejects_points_below_the_branch() {
    assert!(matches!(lambert_w(-0.5), Err(QspError::LambertDomain(_))));
    assert!(matches!(lambert_w(f64::NAN), Err(QspError::LambertDomain(_))));
}

#[test]
fn bessel_at_zero_argument() {
    assert_eq!(bessel_j(0, 0.0), 1.0);
    assert_eq!(bessel_j(1, 0.0), 0.0);
    assert_eq!(bessel_j(7, 0.0), 0.0);
}

#[test]
fn bessel_known_values() {
    assert_abs_diff_eq!(bessel_j(0, 1.0), J0_OF_1, epsilon = 1e-14);
    assert_abs_diff_eq!(bessel_j(1, 1.0), J1_OF_1, epsilon = 1e-14);
    assert_abs_diff_eq!(bessel_j(5, 10.0), J5_OF_10, epsilon = 1e-13);
}

/// Independent oracle: the alternating power series
/// J_k(t) = sum_m (-1)^m (t/2)^{k+2m} / (m! (k+m)!), valid for small t.
fn bessel_series(k: usize, t: f64) -> f64 {
    let half = t / 2.0;
    let mut term = half.powi(k as i32);
    for j in 1..=k {
        term /= j as f64;
    }
    let mut sum = 0.0;
    for m in 0..40 {
        sum += term;
        term *= -half * half / ((m + 1) as f64 * (m + 1 + k) as f64);
    }
    sum
}

#[test]
fn bessel_matches_power_series() {
    for k in 0..8 {
        for &t in &[0.3, 1.0, 2.5, 6.0] {
            assert_abs_diff_eq!(bessel_j(k, t), bessel_series(k, t), epsilon = 1e-12);
        }
    }
}

#[test]
fn bessel_parity_in_the_argument() {
    for k in 0..6 {
        let expected = if k % 2 == 1 { -1.0 } else { 1.0 } * bessel_j(k, 3.7);
        assert_abs_diff_eq!(bessel_j(k, -3.7), expected, epsilon = 1e-15);
    }
}

#[test]
fn bessel_squares_sum_to_one() {
    // J_0^2 + 2 sum_{k>=1} J_k^2 = 1 for every argument.
    for &t in &[0.5, 2.0, 5.0, 12.0] {
        let mut total = bessel_j(0, t).powi(2);
        for k in 1..80 {
            total += 2.0 * bessel_j(k, t).powi(2);
        }
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
    }
}
