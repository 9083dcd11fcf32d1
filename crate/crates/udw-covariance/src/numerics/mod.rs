//! Special functions and integration engines: the exponential integral,
//! adaptive Gauss-Kronrod quadrature for 1D and nested 2D domains, and a
//! seeded Monte-Carlo estimator with scheduling-independent substreams.

mod ei;
mod erf;
mod mc;
mod quad;

pub use ei::expint_ei;
pub use erf::{erf, erfc};
pub use mc::{mc_integrate, Execution, GaussianProductSampler, McEstimate};
pub use quad::{
    quad_adaptive_1d, quad_adaptive_1d_log, quad_nested_2d, quad_nested_2d_carry, LogEndpoint,
    QuadEstimate,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error(
        "quadrature did not converge within {subdivisions} subdivisions \
         (best estimate {best:e} with error estimate {error_estimate:e})"
    )]
    NonConvergence {
        best: f64,
        error_estimate: f64,
        subdivisions: usize,
    },
    #[error("Ei(x) has a logarithmic pole at x = 0 (got x = {x:e})")]
    EiPole { x: f64 },
    #[error("no Monte-Carlo sample was accepted out of {samples} (estimate is degenerate)")]
    DegenerateEstimate { samples: u64 },
    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(String),
    #[error("invalid sampler: {0}")]
    InvalidSampler(String),
}

/// Tolerances and budgets for the adaptive quadrature engines.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    /// Absolute error target.
    pub abs_tol: f64,
    /// Relative error target (against the current integral estimate).
    pub rel_tol: f64,
    /// Panel-splitting budget per 1D integration.
    pub max_subdivisions: usize,
    /// Tail cutoff for Gaussian-damped coordinates, in equivalent standard
    /// deviations of the damping factor.
    pub truncation_sigma: f64,
}

impl QuadratureSpec {
    pub fn new(
        abs_tol: f64,
        rel_tol: f64,
        max_subdivisions: usize,
        truncation_sigma: f64,
    ) -> Result<Self, NumericsError> {
        if !(abs_tol > 0.0 && rel_tol > 0.0) {
            return Err(NumericsError::InvalidSpec(format!(
                "tolerances must be positive (abs {abs_tol}, rel {rel_tol})"
            )));
        }
        if max_subdivisions < 1 {
            return Err(NumericsError::InvalidSpec(
                "max_subdivisions must be at least 1".into(),
            ));
        }
        if !(truncation_sigma >= 6.0) {
            return Err(NumericsError::InvalidSpec(format!(
                "truncation_sigma must be at least 6 (got {truncation_sigma})"
            )));
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
            truncation_sigma,
        })
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-8,
            max_subdivisions: 400,
            truncation_sigma: 12.0,
        }
    }
}
