use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_4;

/// Parity of a definite-parity polynomial target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Chebyshev expansion of a definite-parity target, storing only the
/// retained-parity coefficients ordered lowest to highest degree. The
/// coefficients are already divided by (1 + eps0/4).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChebyshevExpansion {
    pub parity: Parity,
    pub coeffs: Vec<f64>,
}

impl ChebyshevExpansion {
    /// Degree of the k-th stored coefficient.
    pub fn degree_of(&self, k: usize) -> usize {
        match self.parity {
            Parity::Even => 2 * k,
            Parity::Odd => 2 * k + 1,
        }
    }

    /// Evaluate the expansion at x by the three-term Chebyshev recurrence.
    pub fn evaluate(&self, x: f64) -> f64 {
        let top = match self.parity {
            Parity::Even => 2 * (self.coeffs.len().max(1) - 1),
            Parity::Odd => 2 * self.coeffs.len().max(1) - 1,
        };
        let mut acc = 0.0;
        let mut t_prev = 1.0; // T_0
        let mut t_cur = x; // T_1
        for deg in 0..=top {
            let t_here = match deg {
                0 => 1.0,
                1 => x,
                _ => {
                    let t_next = 2.0 * x * t_cur - t_prev;
                    t_prev = t_cur;
                    t_cur = t_next;
                    t_next
                }
            };
            let stored = match self.parity {
                Parity::Even if deg % 2 == 0 => Some(deg / 2),
                Parity::Odd if deg % 2 == 1 => Some(deg / 2),
                _ => None,
            };
            if let Some(k) = stored {
                if k < self.coeffs.len() {
                    acc += self.coeffs[k] * t_here;
                }
            }
        }
        acc
    }
}

/// QSP phase angles: the reduced half returned by the solver plus the
/// symmetric full extension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseSequence {
    pub parity: Parity,
    /// Solver output φ_1..φ_ℓ.
    pub reduced: Vec<f64>,
    /// Palindromic extension with +π/4 added to both end phases. For an odd
    /// target the center phase φ_1 is duplicated; for an even target it
    /// appears once (the duplicate rule as written would be off by one in
    /// length for even degrees).
    pub full: Vec<f64>,
}

impl PhaseSequence {
    pub fn new(parity: Parity, reduced: Vec<f64>) -> PhaseSequence {
        let mut full: Vec<f64> = reduced.iter().rev().copied().collect();
        match parity {
            Parity::Even => full.extend(reduced.iter().skip(1)),
            Parity::Odd => full.extend(reduced.iter()),
        }
        if let Some(first) = full.first_mut() {
            *first += FRAC_PI_4;
        }
        if let Some(last) = full.last_mut() {
            *last += FRAC_PI_4;
        }
        PhaseSequence {
            parity,
            reduced,
            full,
        }
    }

    /// Phase list for the W-convention signal product
    /// `e^{iψ_0 Z} Π_k W(x) e^{iψ_k Z}` whose ⟨0|·|0⟩ imaginary part is the
    /// target polynomial: the palindrome with the center phase doubled for
    /// even targets.
    pub fn w_phases(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self.reduced.iter().rev().copied().collect();
        match self.parity {
            Parity::Even => {
                if let Some(center) = out.last_mut() {
                    *center *= 2.0;
                }
                out.extend(self.reduced.iter().skip(1));
            }
            Parity::Odd => out.extend(self.reduced.iter()),
        }
        out
    }

    /// Phase list for the reflection-convention product
    /// `e^{iψ_0 Z} Π_k R(x) e^{iψ_k Z}` with `R(x) = [[x, √(1−x²)], [√(1−x²), −x]]`,
    /// whose ⟨0|·|0⟩ REAL part is the target polynomial. This is the list the
    /// interferometer circuit consumes.
    pub fn reflection_phases(&self) -> Vec<f64> {
        let w = self.w_phases();
        let degree = w.len() - 1;
        let gamma = match degree % 4 {
            0 => -FRAC_PI_4,
            1 => 0.0,
            2 => FRAC_PI_4,
            _ => 2.0 * FRAC_PI_4,
        };
        let end_shift = -FRAC_PI_4 + gamma;
        let last = w.len() - 1;
        w.iter()
            .enumerate()
            .map(|(i, &p)| {
                if i == 0 || i == last {
                    p + end_shift
                } else {
                    p - 2.0 * FRAC_PI_4
                }
            })
            .collect()
    }
}
