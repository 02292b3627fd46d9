//! Scalar special functions: principal-branch Lambert W and Bessel J_k.

use crate::error::QspError;

/// Principal-branch Lambert W: the real w >= -1 with w e^w = x, for
/// x >= -1/e. Halley iteration to 1e-12 relative accuracy.
pub fn lambert_w(x: f64) -> Result<f64, QspError> {
    let branch_point = -1.0 / std::f64::consts::E;
    if !x.is_finite() || x < branch_point - 1e-12 {
        return Err(QspError::LambertDomain(x));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    // Initial guess by region, then Halley.
    let mut w = if x < -0.25 {
        // Series around the branch point in p = sqrt(2(ex + 1)).
        let p = (2.0 * (std::f64::consts::E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0
    } else if x < 0.25 {
        // W(x) ~ x(1 - x + 3x^2/2) near zero.
        x * (1.0 - x + 1.5 * x * x)
    } else if x < std::f64::consts::E {
        // Midrange: log(1+x) stays within ~25% of W here.
        x.ln_1p()
    } else {
        // Asymptotic guess, valid once log log x is positive.
        let l = x.ln();
        let ll = l.ln();
        l - ll + ll / l
    };
    for _ in 0..60 {
        let ew = w.exp();
        let f = w * ew - x;
        if f == 0.0 {
            break;
        }
        let denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        let step = f / denom;
        w -= step;
        if step.abs() <= 1e-14 * w.abs().max(1e-3) {
            break;
        }
    }
    Ok(w)
}

/// Bessel function of the first kind J_k(t), by the downward Miller
/// recurrence normalized with the Neumann sum J_0 + 2 Σ J_{2m} = 1.
/// Accurate to 1e-12 absolute for |t| <= 50 and k <= 200.
pub fn bessel_j(k: usize, t: f64) -> f64 {
    if t == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    let sign = if t < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
    let t = t.abs();
    // Start far enough above both k and t for the minimal solution to
    // dominate by the time the recurrence reaches k.
    let start = ((k as f64).max(t) + 1.5 * t.sqrt() + 40.0).ceil() as usize;
    let start = start + start % 2; // even
    let mut jp = 0.0f64; // J_{m+1}
    let mut jc = 1e-250f64; // J_m (arbitrary scale)
    let mut norm = 2.0 * jc; // accumulates J_0 + 2 Σ J_{2m}; start is even
    let mut value = 0.0f64;
    for m in (1..=start).rev() {
        let jm = 2.0 * m as f64 / t * jc - jp;
        jp = jc;
        jc = jm;
        if m - 1 == k {
            value = jc;
        }
        if (m - 1) % 2 == 0 {
            norm += if m - 1 == 0 { jc } else { 2.0 * jc };
        }
        if jc.abs() > 1e260 {
            jc /= 1e260;
            jp /= 1e260;
            norm /= 1e260;
            value /= 1e260;
        }
    }
    sign * value / norm
}
