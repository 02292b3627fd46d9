mod common;

use approx::assert_abs_diff_eq;
use common::w_value;
use qsp_numerics::{
    chebyshev_coeffs, dct_type1, qsp_forward_map, solve_phases, truncation_degree,
    ChebyshevExpansion, Parity, QspError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

const TAU_1: f64 = 2.0 / std::f64::consts::E;
const TAU_2: f64 = 4.0 / std::f64::consts::E;
const TAU_4: f64 = 8.0 / std::f64::consts::E;

#[test]
fn dct_of_a_delta_is_constant() {
    let y = dct_type1(&[1.0, 0.0, 0.0, 0.0, 0.0]);
    for v in y {
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-15);
    }
}

#[test]
fn dct_hand_computed_case() {
    // y = [1, 2, 3, 2, 1] on the 2l = 4 grid: Y = [9, 0, -1, 0, 1].
    let y = dct_type1(&[1.0, 2.0, 3.0, 2.0, 1.0]);
    let expected = [9.0, 0.0, -1.0, 0.0, 1.0];
    for (got, want) in y.iter().zip(expected) {
        assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
    }
}

#[test]
fn dct_of_all_ones() {
    let y = dct_type1(&[1.0; 7]);
    assert_abs_diff_eq!(y[0], 7.0, epsilon = 1e-14);
    // Interior bins alternate between 0 and 1 on the uniform grid.
    assert_abs_diff_eq!(y[1], 0.0, epsilon = 1e-14);
    assert_abs_diff_eq!(y[2], 1.0, epsilon = 1e-14);
}

#[test]
fn forward_map_single_phase_golden() {
    // One even phase pi/4 realizes the constant polynomial 1.
    let c = qsp_forward_map(&[std::f64::consts::FRAC_PI_4], Parity::Even);
    assert_eq!(c.len(), 1);
    assert_abs_diff_eq!(c[0], 1.0, epsilon = 1e-14);
}

#[test]
fn forward_map_vanishes_at_zero_phases() {
    for parity in [Parity::Even, Parity::Odd] {
        for l in 1..=6 {
            for v in qsp_forward_map(&vec![0.0; l], parity) {
                assert_abs_diff_eq!(v, 0.0, epsilon = 1e-14);
            }
        }
    }
}

/// Gauss-Chebyshev projection of the polynomial realized by the full
/// W-convention product; exact for these degrees up to roundoff.
fn quadrature_coeffs(full: &[f64], degrees: &[usize]) -> Vec<f64> {
    const M: usize = 2000;
    degrees
        .iter()
        .map(|&k| {
            let factor = if k == 0 { 1.0 } else { 2.0 };
            let sum: f64 = (0..M)
                .map(|m| {
                    let theta = (m as f64 + 0.5) * std::f64::consts::PI / M as f64;
                    w_value(full, theta.cos()) * (k as f64 * theta).cos()
                })
                .sum();
            factor * sum / M as f64
        })
        .collect()
}

#[test]
fn forward_map_matches_quadrature_oracle() {
    let mut rng = ChaCha12Rng::seed_from_u64(20240911);
    for parity in [Parity::Even, Parity::Odd] {
        for l in [1usize, 2, 3, 5] {
            let phi: Vec<f64> = (0..l).map(|_| rng.random_range(-0.3..0.3)).collect();
            let seq = qsp_numerics::PhaseSequence::new(parity, phi.clone());
            let degrees: Vec<usize> = (0..l)
                .map(|k| match parity {
                    Parity::Even => 2 * k,
                    Parity::Odd => 2 * k + 1,
                })
                .collect();
            let oracle = quadrature_coeffs(&seq.w_phases(), &degrees);
            let mapped = qsp_forward_map(&phi, parity);
            for (got, want) in mapped.iter().zip(&oracle) {
                assert_abs_diff_eq!(*got, *want, epsilon = 1e-11);
            }
        }
    }
}

#[test]
fn forward_map_jacobian_at_zero_is_twice_identity() {
    let l = 5;
    let h = 1e-7;
    for parity in [Parity::Even, Parity::Odd] {
        for i in 0..l {
            let mut phi = vec![0.0; l];
            phi[i] = h;
            let f = qsp_forward_map(&phi, parity);
            for (j, v) in f.iter().enumerate() {
                let expected = if j == i { 2.0 * h } else { 0.0 };
                assert_abs_diff_eq!(*v, expected, epsilon = 1e-9);
            }
        }
    }
}

#[test]
fn truncation_degrees_for_the_standard_times() {
    // Frozen against an independent scipy evaluation of the same formula.
    assert_eq!(truncation_degree(TAU_1, 7e-5).unwrap(), 4);
    assert_eq!(truncation_degree(TAU_2, 7e-5).unwrap(), 6);
    assert_eq!(truncation_degree(TAU_4, 7e-5).unwrap(), 8);
}

#[test]
fn truncation_degree_grows_with_time_and_precision() {
    let base = truncation_degree(TAU_1, 7e-5).unwrap();
    let longer = truncation_degree(8.0 * TAU_1, 7e-5).unwrap();
    let tighter = truncation_degree(TAU_1, 1e-9).unwrap();
    assert!(longer >= base);
    assert!(tighter >= base);
    assert_eq!(longer % 2, 0);
    assert_eq!(tighter % 2, 0);
}

#[test]
fn truncation_degree_validates_inputs() {
    assert!(matches!(
        truncation_degree(0.0, 7e-5),
        Err(QspError::ParameterRange { name: "t", .. })
    ));
    assert!(matches!(
        truncation_degree(-1.0, 7e-5),
        Err(QspError::ParameterRange { name: "t", .. })
    ));
    assert!(matches!(
        truncation_degree(1.0, 1e-4),
        Err(QspError::ParameterRange { name: "eps0", .. })
    ));
    assert!(matches!(
        truncation_degree(1.0, 0.0),
        Err(QspError::ParameterRange { name: "eps0", .. })
    ));
}

#[test]
fn chebyshev_targets_track_cos_and_sin() {
    let eps0 = 7e-5;
    for &tau in &[TAU_1, TAU_2, TAU_4] {
        let d = truncation_degree(tau, eps0).unwrap();
        let cos_target = chebyshev_coeffs(tau, d, Parity::Even, eps0).unwrap();
        let sin_target = chebyshev_coeffs(tau, d, Parity::Odd, eps0).unwrap();
        assert_eq!(cos_target.coeffs.len(), d / 2 + 1);
        assert_eq!(sin_target.coeffs.len(), d / 2 + 1);
        let scale = 1.0 / (1.0 + eps0 / 4.0);
        for i in 0..=1000 {
            let x = -1.0 + 2.0 * i as f64 / 1000.0;
            assert!((cos_target.evaluate(x) - scale * (tau * x).cos()).abs() <= eps0);
            assert!((sin_target.evaluate(x) - scale * (tau * x).sin()).abs() <= eps0);
        }
    }
}

#[test]
fn chebyshev_coeffs_at_zero_time() {
    let even = chebyshev_coeffs(0.0, 4, Parity::Even, 7e-5).unwrap();
    assert_abs_diff_eq!(even.coeffs[0], 1.0 / (1.0 + 7e-5 / 4.0), epsilon = 1e-15);
    assert_abs_diff_eq!(even.coeffs[1], 0.0, epsilon = 1e-15);
    let odd = chebyshev_coeffs(0.0, 4, Parity::Odd, 7e-5).unwrap();
    for c in odd.coeffs {
        assert_eq!(c, 0.0);
    }
}

#[test]
fn chebyshev_coeffs_reject_odd_or_tiny_degrees() {
    assert!(matches!(
        chebyshev_coeffs(1.0, 3, Parity::Even, 7e-5),
        Err(QspError::DegreeParity { degree: 3 })
    ));
    assert!(matches!(
        chebyshev_coeffs(1.0, 0, Parity::Even, 7e-5),
        Err(QspError::DegreeParity { degree: 0 })
    ));
}

#[test]
fn expansion_evaluates_single_terms() {
    let t2 = ChebyshevExpansion {
        parity: Parity::Even,
        coeffs: vec![0.0, 1.0],
    };
    assert_abs_diff_eq!(t2.evaluate(0.3), 2.0 * 0.09 - 1.0, epsilon = 1e-15);
    let t3 = ChebyshevExpansion {
        parity: Parity::Odd,
        coeffs: vec![0.0, 1.0],
    };
    assert_abs_diff_eq!(t3.evaluate(0.3), 4.0 * 0.027 - 3.0 * 0.3, epsilon = 1e-15);
    assert_eq!(t2.degree_of(1), 2);
    assert_eq!(t3.degree_of(1), 3);
}

#[test]
fn solver_handles_the_zero_target() {
    let target = ChebyshevExpansion {
        parity: Parity::Even,
        coeffs: vec![0.0, 0.0, 0.0],
    };
    let seq = solve_phases(&target).unwrap();
    for p in &seq.reduced {
        assert_eq!(*p, 0.0);
    }
}

#[test]
fn solver_recovers_the_time_evolution_targets() {
    let eps0 = 7e-5;
    for &tau in &[TAU_1, TAU_2, TAU_4] {
        let d = truncation_degree(tau, eps0).unwrap();
        for parity in [Parity::Even, Parity::Odd] {
            let target = chebyshev_coeffs(tau, d, parity, eps0).unwrap();
            let seq = solve_phases(&target).unwrap();
            assert_eq!(seq.parity, parity);
            assert_eq!(seq.reduced.len(), target.coeffs.len());
            let realized = qsp_forward_map(&seq.reduced, parity);
            let residual: f64 = realized
                .iter()
                .zip(&target.coeffs)
                .map(|(a, b)| (a - b).abs())
                .sum();
            assert!(residual < 1e-10, "residual {residual} for tau = {tau}");
        }
    }
}

#[test]
fn solver_roundtrips_random_small_targets() {
    let mut rng = ChaCha12Rng::seed_from_u64(20240912);
    for parity in [Parity::Even, Parity::Odd] {
        for l in [2usize, 4] {
            let raw: Vec<f64> = (0..l).map(|_| rng.random_range(-1.0..1.0)).collect();
            let norm: f64 = raw.iter().map(|v| v.abs()).sum();
            let coeffs: Vec<f64> = raw.iter().map(|v| 0.9 * v / norm).collect();
            let target = ChebyshevExpansion { parity, coeffs };
            let seq = solve_phases(&target).unwrap();
            let realized = qsp_forward_map(&seq.reduced, parity);
            for (got, want) in realized.iter().zip(&target.coeffs) {
                assert_abs_diff_eq!(*got, *want, epsilon = 1e-9);
            }
        }
    }
}

#[test]
fn solver_reports_nonconvergence_with_history() {
    // A constant target of 50 is far outside the reachable range |P| <= 1,
    // so the iteration can never close the gap.
    let target = ChebyshevExpansion {
        parity: Parity::Even,
        coeffs: vec![50.0],
    };
    match solve_phases(&target) {
        Err(QspError::NonConvergence {
            iterations,
            last,
            history,
        }) => {
            assert_eq!(iterations, history.len());
            assert!(last >= 49.0);
            assert!(!history.is_empty());
        }
        other => panic!("expected NonConvergence, got {other:?}"),
    }
}
