use thiserror::Error;

/// Errors from the scalar QSP kernels.
#[derive(Debug, Error)]
pub enum QspError {
    /// Argument below the principal-branch domain of the Lambert W function.
    #[error("lambert_w argument {0} is below -1/e")]
    LambertDomain(f64),

    /// A parameter fell outside its documented range.
    #[error("parameter {name} = {value} outside {range}")]
    ParameterRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    /// Degree and parity are inconsistent (degree must be even and positive).
    #[error("degree {degree} invalid: expansions are indexed by an even base degree >= 2")]
    DegreeParity { degree: usize },

    /// The fixed-point iteration failed to reach the residual target.
    #[error("phase solver did not converge: residual {last:.3e} after {iterations} iterations")]
    NonConvergence {
        iterations: usize,
        last: f64,
        /// L1 residual after each iteration, for diagnosis.
        history: Vec<f64>,
    },
}
