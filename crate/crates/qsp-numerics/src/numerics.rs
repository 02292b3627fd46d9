//! Chebyshev targets, the cosine-transform coefficient extraction, and the
//! fixed-point phase solver.

use crate::error::QspError;
use crate::special::{bessel_j, lambert_w};
use crate::types::{ChebyshevExpansion, Parity, PhaseSequence};

/// Plain type-I cosine sum `Y_k = Σ_j y_j cos(π j k / 2ℓ)` for a vector of
/// length 2ℓ+1, evaluated directly.
pub fn dct_type1(y: &[f64]) -> Vec<f64> {
    assert!(
        y.len() >= 3 && y.len() % 2 == 1,
        "dct_type1 expects an odd length 2ℓ+1 with ℓ ≥ 1"
    );
    let two_l = y.len() - 1;
    (0..y.len())
        .map(|k| {
            y.iter()
                .enumerate()
                .map(|(j, &v)| v * (std::f64::consts::PI * (j * k) as f64 / two_l as f64).cos())
                .sum()
        })
        .collect()
}

/// Unscaled Jacobi-Anger coefficients of cos(t·x) through degree d:
/// J_0(t), then 2(−1)^k J_{2k}(t).
fn cos_coeffs_unscaled(t: f64, d: usize) -> Vec<f64> {
    let mut coeffs = vec![bessel_j(0, t)];
    for k in 1..=d / 2 {
        let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
        coeffs.push(2.0 * sign * bessel_j(2 * k, t));
    }
    coeffs
}

/// Unscaled Jacobi-Anger coefficients of sin(t·x) through degree d+1:
/// 2(−1)^k J_{2k+1}(t).
fn sin_coeffs_unscaled(t: f64, d: usize) -> Vec<f64> {
    (0..=d / 2)
        .map(|k| {
            let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
            2.0 * sign * bessel_j(2 * k + 1, t)
        })
        .collect()
}

/// Smallest even truncation degree from the protocol formula
/// `d = 2⌊ L / (2 W(L/|t|)) ⌋` with `L = log(16/(5 eps0))`, raised to at
/// least 2 and doubled until the truncated cos expansion meets the eps0
/// bound on a 10⁴-point grid.
pub fn truncation_degree(t: f64, eps0: f64) -> Result<usize, QspError> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(QspError::ParameterRange {
            name: "t",
            value: t,
            range: "(0, ∞)",
        });
    }
    if !(eps0 > 0.0 && eps0 <= 7e-5) {
        return Err(QspError::ParameterRange {
            name: "eps0",
            value: eps0,
            range: "(0, 7e-5]",
        });
    }
    let big_l = (16.0 / (5.0 * eps0)).ln();
    let w = lambert_w(big_l / t)?;
    let mut d = (2.0 * (big_l / (2.0 * w)).floor()).max(2.0) as usize;
    // Guard: double until the truncated expansion actually meets eps0.
    loop {
        let expansion = ChebyshevExpansion {
            parity: Parity::Even,
            coeffs: cos_coeffs_unscaled(t, d),
        };
        let worst = (0..10_000)
            .map(|i| {
                let x = -1.0 + 2.0 * i as f64 / 9_999.0;
                (expansion.evaluate(x) - (t * x).cos()).abs()
            })
            .fold(0.0, f64::max);
        if worst <= eps0 {
            return Ok(d);
        }
        d *= 2;
    }
}

/// Jacobi-Anger Chebyshev coefficients of cos(t·x) (even parity, through
/// degree d) or sin(t·x) (odd parity, through degree d+1), rescaled by
/// 1/(1 + eps0/4).
pub fn chebyshev_coeffs(
    t: f64,
    d: usize,
    parity: Parity,
    eps0: f64,
) -> Result<ChebyshevExpansion, QspError> {
    if d < 2 || d % 2 != 0 {
        return Err(QspError::DegreeParity { degree: d });
    }
    if !(eps0 > 0.0) || !eps0.is_finite() {
        return Err(QspError::ParameterRange {
            name: "eps0",
            value: eps0,
            range: "(0, ∞)",
        });
    }
    let scale = 1.0 / (1.0 + eps0 / 4.0);
    let mut coeffs = match parity {
        Parity::Even => cos_coeffs_unscaled(t, d),
        Parity::Odd => sin_coeffs_unscaled(t, d),
    };
    for c in &mut coeffs {
        *c *= scale;
    }
    Ok(ChebyshevExpansion { parity, coeffs })
}

/// 3×3 rotation about the z axis by angle a (acting on the Bloch-vector
/// triple used by the reduced forward map).
fn rz3(a: f64) -> [[f64; 3]; 3] {
    let (s, c) = a.sin_cos();
    [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]
}

/// 3×3 signal rotation at node angle θ.
fn b3(theta: f64) -> [[f64; 3]; 3] {
    let (s, c) = (2.0 * theta).sin_cos();
    [[c, 0.0, -s], [0.0, 1.0, 0.0], [s, 0.0, c]]
}

fn mat_vec(m: &[[f64; 3]; 3], v: [f64; 3]) -> [f64; 3] {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

/// Forward map F(φ): the retained-parity Chebyshev coefficients of the
/// polynomial realized by the reduced phase vector φ.
///
/// Steps: evaluate the imaginary-part polynomial at the ℓ+1 nodes
/// x_j = cos(πj/2ℓ) via 3×3 rotation products (the k = 1 factor adjacent to
/// the initial vector), extend symmetrically with the parity sign, take the
/// cosine transform with doubled interior samples, normalize ends by 1/4ℓ
/// and the interior by 1/2ℓ, and keep every second coefficient.
pub fn qsp_forward_map(phi: &[f64], parity: Parity) -> Vec<f64> {
    let l = phi.len();
    assert!(l >= 1, "need at least one phase");
    let two_l = 2 * l;
    let mut y = vec![0.0; two_l + 1];
    for j in 0..=l {
        let theta = std::f64::consts::PI * j as f64 / two_l as f64;
        let mut v = match parity {
            Parity::Even => [1.0, 0.0, 0.0],
            Parity::Odd => [theta.cos(), 0.0, theta.sin()],
        };
        let b = b3(theta);
        for k in 1..l {
            v = mat_vec(&b, mat_vec(&rz3(2.0 * phi[k - 1]), v));
        }
        let (s, c) = (2.0 * phi[l - 1]).sin_cos();
        y[j] = s * v[0] + c * v[1];
    }
    let parity_sign = match parity {
        Parity::Even => 1.0,
        Parity::Odd => -1.0,
    };
    for j in l + 1..=two_l {
        y[j] = parity_sign * y[two_l - j];
    }
    // Cosine transform with interior doubling: the plain sum counts each
    // sample once, but coefficient extraction for a type-I grid needs the
    // interior samples twice and the two end samples once.
    let plain = dct_type1(&y);
    let mut coeffs = Vec::with_capacity(l);
    for k in 0..two_l {
        let keep = match parity {
            Parity::Even => k % 2 == 0,
            Parity::Odd => k % 2 == 1,
        };
        if !keep || coeffs.len() == l {
            continue;
        }
        let end_sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let doubled = 2.0 * plain[k] - y[0] - end_sign * y[two_l];
        let weight = if k == 0 { 1.0 / (4 * l) as f64 } else { 1.0 / (2 * l) as f64 };
        coeffs.push(weight * doubled);
    }
    coeffs
}

/// Residual target and iteration cap of the fixed-point phase solver.
pub const PHASE_RESIDUAL_TARGET: f64 = 1e-10;
pub const PHASE_ITERATION_CAP: usize = 10_000;

/// Solve F(φ) = C for the reduced phases by damped fixed-point iteration
/// `φ ← φ − (F(φ) − C)/2`, starting from C/2.
pub fn solve_phases(c: &ChebyshevExpansion) -> Result<PhaseSequence, QspError> {
    assert!(!c.coeffs.is_empty(), "need at least one coefficient");
    let mut phi: Vec<f64> = c.coeffs.iter().map(|v| v / 2.0).collect();
    let mut history = Vec::new();
    for _ in 0..PHASE_ITERATION_CAP {
        let f = qsp_forward_map(&phi, c.parity);
        let residual: f64 = f
            .iter()
            .zip(&c.coeffs)
            .map(|(fv, cv)| (fv - cv).abs())
            .sum();
        history.push(residual);
        if residual < PHASE_RESIDUAL_TARGET {
            return Ok(PhaseSequence::new(c.parity, phi));
        }
        if !residual.is_finite() || residual > 1e6 {
            return Err(QspError::NonConvergence {
                iterations: history.len(),
                last: residual,
                history,
            });
        }
        for (p, (fv, cv)) in phi.iter_mut().zip(f.iter().zip(&c.coeffs)) {
            *p -= 0.5 * (fv - cv);
        }
    }
    let last = *history.last().expect("at least one iteration ran");
    Err(QspError::NonConvergence {
        iterations: history.len(),
        last,
        history,
    })
}
