//! Phase-factor numerics for quantum signal processing.
//!
//! Builds truncated Jacobi-Anger expansions of cos(t·x) and sin(t·x),
//! solves for the symmetric QSP phases that realize them via the damped
//! fixed-point iteration of Dong, Meng, Whaley and Lin (arXiv:2002.11649),
//! and converts the solved phases between the reflection and W-operator
//! conventions (Martyn et al., arXiv:2105.02859).

mod error;
mod numerics;
mod special;
mod types;

pub use error::QspError;
pub use numerics::{
    chebyshev_coeffs, dct_type1, qsp_forward_map, solve_phases, truncation_degree,
    PHASE_ITERATION_CAP, PHASE_RESIDUAL_TARGET,
};
pub use special::{bessel_j, lambert_w};
pub use types::{ChebyshevExpansion, Parity, PhaseSequence};
