//! The four evaluation paths for `Tr rho_phi E` and the pointlike null
//! result.
//!
//! Reduced-path prefactors. Carrying out the analytic integrals in the
//! defining object over the flip region `{sigma > 0, xi < -sigma/v}`
//! (`sigma` proper-time separation, `xi` boost-axis separation) gives:
//!
//! * switching autocorrelation over the common time:
//!   `T e^{-sigma^2/4T^2} / (2 sqrt(pi))`,
//! * boost-axis smearing overlap: `e^{-xi^2/4l^2} / (2 sqrt(pi) l)`,
//! * transverse smearing pair: `1/(2 l^2) * Int_0^inf dr r e^{-r^2/4l^2}
//!   / (xi^2 - sigma^2 + r^2)`, whose closed form is
//!   `-(1/2) e^{(xi^2-sigma^2)/4l^2} Ei((sigma^2-xi^2)/4l^2)`,
//! * vacuum kernel constant `1/(2 pi^2)` from the spacelike Wightman
//!   function.
//!
//! Collecting constants (including the overall `-2i`):
//!
//! ```text
//! value = -i T/(8 pi^3 l^3)  * I3   (three-dimensional reduction)
//!       = +i T/(16 pi^3 l^3) * I2   (Ei closed form)
//!       = +i v (T/l)^3/(16 pi^3) * I2'(v, T/l, Omega T)   (dimensionless)
//! ```
//!
//! These prefactors are fixed against the Monte-Carlo reference of the
//! defining integral (the path-equivalence suite re-derives the agreement
//! at every release), not against any printed closed form.

use super::{EvalPath, ViolationError, ViolationParams, ViolationResult};
use crate::detector::{DetectorConfig, SmearingKind};
use crate::field::{self, FieldState};
use crate::geometry::{in_s_leq, FrameSpec, SpacetimeEvent};
use crate::numerics::{
    expint_ei, mc_integrate, quad_nested_2d_carry, Execution, GaussianProductSampler, LogEndpoint,
    NumericsError, QuadEstimate, QuadratureSpec,
};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Minimum sample budget for the Monte-Carlo reference.
pub const MC_MIN_SAMPLES: u64 = 10_000;

/// Gaussian damping factors are truncated where they fall to 1e-18 of
/// their peak; `ln(1e18)` converts that cutoff into a squared coordinate.
const LN_DAMPING_CUTOFF: f64 = 41.44653167389282;

/// Boost speeds above this get the log-aware inner rule: the Ei argument
/// vanishes on `xi = -sigma`, and the domain boundary `-sigma/v` touches
/// that line as v -> 1.
const LOG_AWARE_SPEED: f64 = 0.95;

fn dimensional_params(config: &DetectorConfig) -> ViolationParams {
    ViolationParams::Dimensional {
        v: config.v(),
        omega: config.omega(),
        t_switch: config.t_switch(),
        ell: config.ell(),
    }
}

/// Exact null result of the pointlike limit: the delta smearing has no
/// support at the strictly negative boost-axis separations that make up
/// the flip region, for every parameter choice.
pub fn pointlike_trace_e(config: &DetectorConfig) -> Result<ViolationResult, ViolationError> {
    if config.smearing_kind() != SmearingKind::Pointlike {
        return Err(ViolationError::ExpectedPointlike);
    }
    Ok(ViolationResult::exact_zero(
        EvalPath::PointlikeAnalytic,
        dimensional_params(config),
    ))
}

/// Monte-Carlo reference with the default execution mode.
pub fn trace_e_reference_mc(
    config: &DetectorConfig,
    state: &FieldState,
    frame_t: FrameSpec,
    samples: u64,
    seed: u64,
) -> Result<ViolationResult, ViolationError> {
    trace_e_reference_mc_exec(config, state, frame_t, samples, seed, Execution::default())
}

/// Monte-Carlo estimate of the defining integral.
///
/// The eight coordinates `(tau, xbar, tau', xbar')` are importance-sampled
/// from the product of the switching and smearing densities (the switching
/// profile is `T` times a normal density, contributing a constant weight
/// `T^2`), membership in the flip region is decided exactly by
/// [`in_s_leq`] between the detector rest frame and `frame_t`, and the
/// surviving factors `-2i T^2 W sin(Omega (tau - tau'))` are averaged.
/// Bit-reproducible for a fixed `(seed, samples)` in every execution mode.
pub fn trace_e_reference_mc_exec(
    config: &DetectorConfig,
    state: &FieldState,
    frame_t: FrameSpec,
    samples: u64,
    seed: u64,
    exec: Execution,
) -> Result<ViolationResult, ViolationError> {
    if samples < MC_MIN_SAMPLES {
        return Err(ViolationError::TooFewSamples {
            got: samples,
            min: MC_MIN_SAMPLES,
        });
    }
    if config.smearing_kind() == SmearingKind::Pointlike {
        return pointlike_trace_e(config);
    }
    let params = dimensional_params(config);
    let frame_tau = FrameSpec::new(config.v()).map_err(ViolationError::Geometry)?;
    // sin(Omega sigma) vanishes identically at zero gap; comoving frames
    // share a time order, leaving an empty flip region. Both zeros are
    // exact, not sampled.
    if config.omega() == 0.0 || frame_tau.velocity() == frame_t.velocity() {
        return Ok(ViolationResult::exact_zero(EvalPath::MonteCarloReference, params));
    }

    let (t, l) = (config.t_switch(), config.ell());
    let omega = config.omega();
    let sampler = GaussianProductSampler::new(vec![t, l, l, l, t, l, l, l])
        .map_err(ViolationError::Numerics)?;
    let weight = -2.0 * t * t;
    let state = *state;

    let accept = |x: &[f64]| {
        let a = SpacetimeEvent {
            t: x[0],
            x: x[1],
            y: x[2],
            z: x[3],
            frame: frame_tau,
        };
        let b = SpacetimeEvent {
            t: x[4],
            x: x[5],
            y: x[6],
            z: x[7],
            frame: frame_tau,
        };
        in_s_leq(&a, &b, frame_tau, frame_t)
    };
    let f = |x: &[f64]| {
        let sigma = x[0] - x[4];
        let dy = x[2] - x[6];
        let dz = x[3] - x[7];
        let s2 = field::interval_sq_detector_frame(
            sigma,
            x[1] - x[5],
            (dy * dy + dz * dz).sqrt(),
        );
        let w = field::wightman_spacelike(s2, &state)
            .expect("flip-region membership implies strictly spacelike separation");
        Complex64::new(0.0, weight * w * (omega * sigma).sin())
    };

    let est = mc_integrate(f, &sampler, accept, samples, seed, exec)
        .map_err(ViolationError::Numerics)?;
    Ok(ViolationResult {
        value: est.mean,
        error_estimate: est.std_error,
        path: EvalPath::MonteCarloReference,
        params,
    })
}

struct QuadPaths<'a> {
    v: f64,
    t: f64,
    ell: f64,
    omega: f64,
    spec: &'a QuadratureSpec,
}

impl QuadPaths<'_> {
    /// Truncated outer domain: the explicit Gaussian damping combined with
    /// the boost-axis suppression at the flip boundary (`|xi| > sigma/v`)
    /// falls below 1e-18 of peak beyond this point.
    fn sigma_max(&self) -> f64 {
        let alpha = 0.25 / (self.t * self.t) + 0.25 / (self.v * self.v * self.ell * self.ell);
        (LN_DAMPING_CUTOFF / alpha).sqrt()
    }

    /// Depth of the xi window below the flip boundary, in the
    /// `sqrt(2) l`-scaled decay of the transverse kernel.
    fn xi_pad(&self) -> f64 {
        self.spec.truncation_sigma * std::f64::consts::SQRT_2 * self.ell
    }

    fn inner_log(&self) -> Option<LogEndpoint> {
        (self.v > LOG_AWARE_SPEED).then_some(LogEndpoint::Upper)
    }

    /// Three-dimensional reduction: explicit radial quadrature of the
    /// transverse kernel inside the (sigma, xi) integral.
    fn reduced3d(&self) -> Result<QuadEstimate, NumericsError> {
        let (t, l, v, omega) = (self.t, self.ell, self.v, self.omega);
        let four_t2 = 4.0 * t * t;
        let four_l2 = 4.0 * l * l;
        let r_max = self.spec.truncation_sigma * std::f64::consts::SQRT_2 * l;
        let r_spec = QuadratureSpec {
            abs_tol: 0.05 * self.spec.abs_tol,
            rel_tol: 0.05 * self.spec.rel_tol,
            ..self.spec.clone()
        };
        let integrand = |sigma: f64, xi: f64| -> (f64, f64) {
            let a = xi * xi - sigma * sigma;
            let radial = crate::numerics::quad_adaptive_1d(
                |r| r * (-r * r / four_l2).exp() / (a + r * r),
                0.0,
                r_max,
                &r_spec,
            );
            let (k, k_err) = match radial {
                Ok(est) => (est.value, est.error_estimate),
                Err(NumericsError::NonConvergence {
                    best,
                    error_estimate,
                    ..
                }) => (best, error_estimate),
                Err(_) => (f64::NAN, f64::INFINITY),
            };
            let envelope =
                (-sigma * sigma / four_t2).exp() * (-xi * xi / four_l2).exp() * (omega * sigma).sin();
            (envelope * k, envelope.abs() * k_err)
        };
        let pad = self.xi_pad();
        quad_nested_2d_carry(
            integrand,
            0.0,
            self.sigma_max(),
            |sigma| (-sigma / v - pad, -sigma / v),
            self.spec,
            self.inner_log(),
        )
    }

    /// Ei closed form of the radial integral; two-dimensional quadrature.
    fn ei_2d(&self) -> Result<QuadEstimate, NumericsError> {
        let (t, l, v, omega) = (self.t, self.ell, self.v, self.omega);
        let alpha = 0.25 / (t * t) + 0.25 / (l * l);
        let four_l2 = 4.0 * l * l;
        let pad = self.xi_pad();
        quad_nested_2d_carry(
            |sigma, xi| {
                let arg = ((sigma * sigma - xi * xi) / four_l2).min(-1e-300);
                let ei = expint_ei(arg).expect("argument is strictly negative");
                ((-alpha * sigma * sigma).exp() * (omega * sigma).sin() * ei, 0.0)
            },
            0.0,
            self.sigma_max(),
            |sigma| (-sigma / v - pad, -sigma / v),
            self.spec,
            self.inner_log(),
        )
    }
}

/// Nested quadrature of the three-dimensional reduction, specialized to
/// the detector rest frame against the lab frame. Purely imaginary.
pub fn trace_e_reduced3d(
    config: &DetectorConfig,
    state: &FieldState,
    quad: &QuadratureSpec,
) -> Result<ViolationResult, ViolationError> {
    dimensional_quad_path(config, state, quad, EvalPath::Reduced3d)
}

/// Two-dimensional quadrature with the radial integral replaced by its
/// exponential-integral closed form. Purely imaginary.
pub fn trace_e_ei_2d(
    config: &DetectorConfig,
    state: &FieldState,
    quad: &QuadratureSpec,
) -> Result<ViolationResult, ViolationError> {
    dimensional_quad_path(config, state, quad, EvalPath::EiClosedForm2d)
}

fn dimensional_quad_path(
    config: &DetectorConfig,
    state: &FieldState,
    quad: &QuadratureSpec,
    path: EvalPath,
) -> Result<ViolationResult, ViolationError> {
    if config.smearing_kind() == SmearingKind::Pointlike {
        return pointlike_trace_e(config);
    }
    let FieldState::MasslessVacuum3p1 = state;
    let params = dimensional_params(config);
    if config.omega() == 0.0 || config.v() == 0.0 {
        return Ok(ViolationResult::exact_zero(path, params));
    }

    // The flip region mirrors in xi under v -> -v while the weights are
    // even in xi, so the value depends on |v| only.
    let ctx = QuadPaths {
        v: config.v().abs(),
        t: config.t_switch(),
        ell: config.ell(),
        omega: config.omega(),
        spec: quad,
    };
    let (estimate, prefactor) = match path {
        EvalPath::Reduced3d => (
            ctx.reduced3d(),
            -ctx.t / (8.0 * PI.powi(3) * ctx.ell.powi(3)),
        ),
        EvalPath::EiClosedForm2d => (
            ctx.ei_2d(),
            ctx.t / (16.0 * PI.powi(3) * ctx.ell.powi(3)),
        ),
        _ => unreachable!("dimensional quadrature paths only"),
    };
    finish_quad_path(estimate, prefactor, path, params)
}

/// The dimensionless form: depends only on `(v, T/l, Omega T)`.
///
/// `value = i v (T/l)^3/(16 pi^3) Int_0^inf ds Int_{-inf}^{-s} dzeta
/// exp(-(s^2 v^2/4)(1 + (T/l)^2)) sin(Omega T v s)
/// Ei((s^2 v^2 - zeta^2)(T/l)^2/4)`.
pub fn trace_e_dimensionless(
    v: f64,
    t_over_ell: f64,
    omega_t: f64,
    quad: &QuadratureSpec,
) -> Result<ViolationResult, ViolationError> {
    if !(v.is_finite() && (0.0..1.0).contains(&v)) {
        return Err(ViolationError::InvalidParameter { name: "v", value: v });
    }
    if !(t_over_ell.is_finite() && t_over_ell > 0.0) {
        return Err(ViolationError::InvalidParameter {
            name: "t_over_ell",
            value: t_over_ell,
        });
    }
    if !omega_t.is_finite() {
        return Err(ViolationError::InvalidParameter {
            name: "omega_t",
            value: omega_t,
        });
    }
    let params = ViolationParams::Dimensionless {
        v,
        t_over_ell,
        omega_t,
    };
    if v == 0.0 || omega_t == 0.0 {
        return Ok(ViolationResult::exact_zero(EvalPath::Dimensionless2d, params));
    }

    let u = t_over_ell;
    let estimate = dimensionless_integral(v, u, omega_t, quad);
    let prefactor = v * u.powi(3) / (16.0 * PI.powi(3));
    finish_quad_path(estimate, prefactor, EvalPath::Dimensionless2d, params)
}

pub(crate) fn dimensionless_integral(
    v: f64,
    u: f64,
    omega_t: f64,
    spec: &QuadratureSpec,
) -> Result<QuadEstimate, NumericsError> {
    let damping = 0.25 * v * v * (1.0 + u * u);
    // Combined with the Ei suppression at the zeta = -s boundary the
    // exponential scale is (v^2 + u^2)/4.
    let s_max = (LN_DAMPING_CUTOFF / (0.25 * (v * v + u * u))).sqrt();
    let pad = spec.truncation_sigma * std::f64::consts::SQRT_2 / u;
    let quarter_u2 = 0.25 * u * u;
    let inner_log = (v > LOG_AWARE_SPEED).then_some(LogEndpoint::Upper);
    quad_nested_2d_carry(
        |s, zeta| {
            let arg = ((s * s * v * v - zeta * zeta) * quarter_u2).min(-1e-300);
            let ei = expint_ei(arg).expect("argument is strictly negative");
            ((-damping * s * s).exp() * (omega_t * v * s).sin() * ei, 0.0)
        },
        0.0,
        s_max,
        |s| (-s - pad, -s),
        spec,
        inner_log,
    )
}

fn finish_quad_path(
    estimate: Result<QuadEstimate, NumericsError>,
    prefactor: f64,
    path: EvalPath,
    params: ViolationParams,
) -> Result<ViolationResult, ViolationError> {
    let wrap = |est: QuadEstimate| ViolationResult {
        value: Complex64::new(0.0, prefactor * est.value),
        error_estimate: prefactor.abs() * est.error_estimate,
        path,
        params,
    };
    match estimate {
        Ok(est) => Ok(wrap(est)),
        Err(NumericsError::NonConvergence {
            best,
            error_estimate,
            ..
        }) => Err(ViolationError::NonConvergence {
            best: Box::new(wrap(QuadEstimate {
                value: best,
                error_estimate,
            })),
        }),
        Err(other) => Err(ViolationError::Numerics(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::quad_adaptive_1d;

    fn gaussian(omega: f64, t: f64, ell: f64, v: f64) -> DetectorConfig {
        DetectorConfig::gaussian(omega, 0.01, t, ell, v).unwrap()
    }

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn pointlike_is_exactly_zero() {
        for (omega, t, v) in [(0.1, 1.0, 0.3), (100.0, 1.0, 0.999), (3.0, 50.0, 0.6)] {
            let cfg = DetectorConfig::pointlike(omega, 1.0, t, v).unwrap();
            let res = pointlike_trace_e(&cfg).unwrap();
            assert_eq!(res.value, Complex64::new(0.0, 0.0));
            assert_eq!(res.error_estimate, 0.0);
            assert_eq!(res.path, EvalPath::PointlikeAnalytic);
        }
        let smeared = gaussian(1.0, 1.0, 1.0, 0.5);
        assert!(matches!(
            pointlike_trace_e(&smeared),
            Err(ViolationError::ExpectedPointlike)
        ));
    }

    #[test]
    fn zero_gap_and_comoving_are_exact_zeros() {
        let state = FieldState::MasslessVacuum3p1;
        let s = spec();

        let zero_gap = gaussian(0.0, 2.0, 1.0, 0.7);
        for res in [
            trace_e_reduced3d(&zero_gap, &state, &s).unwrap(),
            trace_e_ei_2d(&zero_gap, &state, &s).unwrap(),
            trace_e_reference_mc(&zero_gap, &state, FrameSpec::lab(), 10_000, 1).unwrap(),
        ] {
            assert_eq!(res.value, Complex64::new(0.0, 0.0));
            assert_eq!(res.error_estimate, 0.0);
        }

        let comoving = gaussian(1.0, 2.0, 1.0, 0.0);
        for res in [
            trace_e_reduced3d(&comoving, &state, &s).unwrap(),
            trace_e_ei_2d(&comoving, &state, &s).unwrap(),
            trace_e_reference_mc(&comoving, &state, FrameSpec::lab(), 10_000, 1).unwrap(),
        ] {
            assert_eq!(res.value, Complex64::new(0.0, 0.0));
        }

        assert_eq!(
            trace_e_dimensionless(0.0, 10.0, 1.0, &s).unwrap().value,
            Complex64::new(0.0, 0.0)
        );
        assert_eq!(
            trace_e_dimensionless(0.5, 10.0, 0.0, &s).unwrap().value,
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn mc_detector_frame_comparison_is_exact_zero() {
        let cfg = gaussian(1.0, 2.0, 1.0, 0.6);
        let det_frame = FrameSpec::new(0.6).unwrap();
        let res = trace_e_reference_mc(&cfg, &FieldState::MasslessVacuum3p1, det_frame, 10_000, 3)
            .unwrap();
        assert_eq!(res.value, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn mc_rejects_tiny_sample_budgets() {
        let cfg = gaussian(1.0, 1.0, 1.0, 0.6);
        assert!(matches!(
            trace_e_reference_mc(&cfg, &FieldState::MasslessVacuum3p1, FrameSpec::lab(), 9_999, 1),
            Err(ViolationError::TooFewSamples { .. })
        ));
    }

    #[test]
    fn dimensionless_parameter_validation() {
        let s = spec();
        assert!(trace_e_dimensionless(-0.1, 1.0, 1.0, &s).is_err());
        assert!(trace_e_dimensionless(1.0, 1.0, 1.0, &s).is_err());
        assert!(trace_e_dimensionless(0.5, 0.0, 1.0, &s).is_err());
        assert!(trace_e_dimensionless(0.5, -2.0, 1.0, &s).is_err());
        assert!(trace_e_dimensionless(0.5, 1.0, f64::NAN, &s).is_err());
    }

    #[test]
    fn quadrature_paths_are_purely_imaginary_and_odd_in_omega() {
        let s = spec();
        let res = trace_e_dimensionless(0.6, 3.0, 1.2, &s).unwrap();
        assert_eq!(res.value.re, 0.0);
        assert!(res.value.im < 0.0, "got {}", res.value.im);

        // Oddness is exact: the integrand flips sign pointwise, so the
        // subdivision sequence and panel sums are identical up to sign.
        let neg = trace_e_dimensionless(0.6, 3.0, -1.2, &s).unwrap();
        assert_eq!(neg.value.im, -res.value.im);
    }

    #[test]
    fn reduced3d_matches_ei_closed_form() {
        let s = spec();
        let state = FieldState::MasslessVacuum3p1;
        let cfg = gaussian(1.0, 1.0, 1.0, 0.9);
        let a = trace_e_reduced3d(&cfg, &state, &s).unwrap();
        let b = trace_e_ei_2d(&cfg, &state, &s).unwrap();
        let rel = (a.value.im - b.value.im).abs() / b.value.im.abs();
        assert!(rel < 1e-6, "reduced3d {} vs ei2d {}", a.value.im, b.value.im);
    }

    #[test]
    fn ei2d_matches_independent_reference() {
        // Checked against an independent adaptive-quadrature evaluation of
        // the same reduced integral in another toolchain (value for
        // v = 0.9, T = 1, l = 1, Omega = 1).
        let cfg = gaussian(1.0, 1.0, 1.0, 0.9);
        let res = trace_e_ei_2d(&cfg, &FieldState::MasslessVacuum3p1, &spec()).unwrap();
        let reference = -1.630747e-3;
        assert!(
            (res.value.im - reference).abs() < 2e-8,
            "got {}, reference {reference}",
            res.value.im
        );
    }

    #[test]
    fn dimensionless_matches_dimensional_at_scaled_parameters() {
        let s = spec();
        let state = FieldState::MasslessVacuum3p1;
        // (T = 2, l = 0.2, Omega = 0.5) has T/l = 10, Omega T = 1.
        let dim = trace_e_ei_2d(&gaussian(0.5, 2.0, 0.2, 0.6), &state, &s).unwrap();
        let norm = trace_e_dimensionless(0.6, 10.0, 1.0, &s).unwrap();
        let rel = (dim.value.im - norm.value.im).abs() / norm.value.im.abs();
        assert!(rel < 1e-7, "dim {} vs dimensionless {}", dim.value.im, norm.value.im);
    }

    #[test]
    fn magnitude_vanishes_as_speed_goes_to_zero() {
        let s = spec();
        let state = FieldState::MasslessVacuum3p1;
        let mags: Vec<f64> = [0.2, 0.1, 0.05, 0.025]
            .iter()
            .map(|&v| {
                trace_e_ei_2d(&gaussian(0.5, 2.0, 0.2, v), &state, &s)
                    .unwrap()
                    .value
                    .norm()
            })
            .collect();
        for pair in mags.windows(2) {
            assert!(pair[1] < pair[0], "magnitudes not decreasing: {mags:?}");
        }
        assert!(mags[3] < 0.1 * mags[0]);
    }

    #[test]
    fn radial_kernel_is_positive_on_the_flip_domain() {
        // xi^2 - sigma^2 > 0 throughout the domain (xi < -sigma/v with
        // v < 1), so the radial integrand r e^{-r^2/4l^2}/(xi^2 - sigma^2
        // + r^2) is positive.
        let s = spec();
        for (sigma, xi) in [(0.5, -1.0), (1.0, -1.2), (2.0, -7.0)] {
            let a: f64 = xi * xi - sigma * sigma;
            assert!(a > 0.0);
            let k = quad_adaptive_1d(
                |r: f64| r * (-r * r / 4.0).exp() / (a + r * r),
                0.0,
                17.0,
                &s,
            )
            .unwrap();
            assert!(k.value > 0.0);
        }
    }

    #[test]
    fn mc_agrees_with_ei2d_at_moderate_budget() {
        let cfg = gaussian(1.0, 1.0, 1.0, 0.9);
        let state = FieldState::MasslessVacuum3p1;
        let quad = trace_e_ei_2d(&cfg, &state, &spec()).unwrap();
        let mc =
            trace_e_reference_mc(&cfg, &state, FrameSpec::lab(), 2_000_000, 20_240_817).unwrap();
        assert_eq!(mc.value.re, 0.0);
        let diff = (mc.value.im - quad.value.im).abs();
        let band = 4.0 * (mc.error_estimate + quad.error_estimate);
        assert!(diff <= band, "diff {diff:e} exceeds {band:e} (mc {mc:?})");
    }

    #[test]
    fn mc_is_bit_reproducible_across_execution_modes() {
        let cfg = gaussian(1.0, 1.0, 1.0, 0.9);
        let state = FieldState::MasslessVacuum3p1;
        let a = trace_e_reference_mc_exec(
            &cfg,
            &state,
            FrameSpec::lab(),
            300_000,
            99,
            Execution::Sequential,
        )
        .unwrap();
        let b = trace_e_reference_mc_exec(
            &cfg,
            &state,
            FrameSpec::lab(),
            300_000,
            99,
            Execution::Sequential,
        )
        .unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.error_estimate, b.error_estimate);

        #[cfg(feature = "parallel")]
        {
            let c = trace_e_reference_mc_exec(
                &cfg,
                &state,
                FrameSpec::lab(),
                300_000,
                99,
                Execution::Parallel,
            )
            .unwrap();
            assert_eq!(a.value, c.value);
            assert_eq!(a.error_estimate, c.error_estimate);
        }
    }
}
