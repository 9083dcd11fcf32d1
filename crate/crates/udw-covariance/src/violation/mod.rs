//! The core diagnostic: the field-state trace of the frame-discrepancy
//! operator (`Tr rho_phi E`) for one inertial smeared detector, evaluated
//! along four mutually cross-validating paths, plus the second-order
//! detector-state deviations it drives for one and many detectors.
//!
//! All evaluation paths target the same defining object
//!
//! ```text
//! Tr rho_phi E = -2i Int dV dV' L(x) L(x') W(x,x') sin(Omega (tau - tau'))
//! ```
//!
//! integrated over the ordered pairs whose time order flips between the
//! detector rest frame and the comparison frame (spacelike pairs that are
//! later in proper time but not later in the comparison time). For the
//! massless vacuum the kernel is real and the value purely imaginary.

mod deviation;
mod paths;

pub use deviation::{multi_detector_deviation, single_detector_deviation, DeviationMatrix};
pub use paths::{
    pointlike_trace_e, trace_e_dimensionless, trace_e_ei_2d, trace_e_reduced3d,
    trace_e_reference_mc, trace_e_reference_mc_exec,
};

use crate::detector::DetectorError;
use crate::geometry::GeometryError;
use crate::numerics::NumericsError;
use num_complex::Complex64;
use thiserror::Error;

/// Which evaluator produced a [`ViolationResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalPath {
    /// Seeded Monte-Carlo estimate of the defining integral.
    MonteCarloReference,
    /// Nested quadrature over (sigma, xi, r) after the analytic switching
    /// and transverse reductions.
    Reduced3d,
    /// Quadrature over (sigma, xi) with the radial integral in
    /// exponential-integral closed form.
    EiClosedForm2d,
    /// The dimensionless (v, T/l, Omega T) form.
    Dimensionless2d,
    /// The analytic zero of the pointlike limit (distinct from a numerical
    /// zero of the smeared evaluators).
    PointlikeAnalytic,
}

impl EvalPath {
    pub fn label(&self) -> &'static str {
        match self {
            EvalPath::MonteCarloReference => "mc",
            EvalPath::Reduced3d => "reduced3d",
            EvalPath::EiClosedForm2d => "ei2d",
            EvalPath::Dimensionless2d => "dimensionless",
            EvalPath::PointlikeAnalytic => "pointlike",
        }
    }
}

/// The inputs a result was evaluated at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ViolationParams {
    Dimensional {
        v: f64,
        omega: f64,
        t_switch: f64,
        ell: f64,
    },
    Dimensionless {
        v: f64,
        t_over_ell: f64,
        omega_t: f64,
    },
}

/// Value of `Tr rho_phi E` with its evaluation-path tag and error
/// estimate (statistical for the Monte-Carlo path, quadrature otherwise).
#[derive(Debug, Clone, PartialEq)]
pub struct ViolationResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub path: EvalPath,
    pub params: ViolationParams,
}

impl ViolationResult {
    pub(crate) fn exact_zero(path: EvalPath, params: ViolationParams) -> Self {
        Self {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
            path,
            params,
        }
    }
}

#[derive(Debug, Error)]
pub enum ViolationError {
    #[error("evaluation did not converge; best estimate {best:?}")]
    NonConvergence { best: Box<ViolationResult> },
    #[error("the Monte-Carlo reference requires at least {min} samples (got {got})")]
    TooFewSamples { got: u64, min: u64 },
    #[error("operation requires a pointlike smearing kind")]
    ExpectedPointlike,
    #[error("invalid parameter {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("detector and violation lists differ in length ({detectors} vs {violations})")]
    MismatchedLengths { detectors: usize, violations: usize },
    #[error("dense multi-detector deviation supports 1..={max} detectors (got {got})")]
    DetectorCountOutOfRange { got: usize, max: usize },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Detector(#[from] DetectorError),
}
