//! Adaptive Gauss-Kronrod quadrature.
//!
//! Panels are integrated with the embedded 7/15 pair; the panel error is
//! the rescaled difference between the two rules. A global worst-panel
//! bisection loop refines until the summed error meets the tolerance or
//! the subdivision budget runs out. Semi-infinite upper limits are mapped
//! by `x = a + u/(1-u)`; declared logarithmic endpoints get a
//! geometrically graded initial partition toward the singular end.
//!
//! Integrands may carry a subordinate error channel (the error estimate of
//! an inner quadrature); it is integrated alongside the value and added to
//! the reported estimate, which is how nested integrals propagate their
//! inner error outward.

use super::{NumericsError, QuadratureSpec};
use std::collections::BinaryHeap;

/// Integral value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadEstimate {
    pub value: f64,
    pub error_estimate: f64,
}

/// Which endpoint of the domain carries an integrable logarithmic
/// singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogEndpoint {
    Lower,
    Upper,
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[derive(Debug, Clone, Copy)]
struct PanelEval {
    value: f64,
    error: f64,
    /// Integrated subordinate error over the panel.
    carry: f64,
}

/// 15-point Kronrod evaluation with the embedded 7-point Gauss estimate;
/// the integrand returns (value, subordinate error).
fn qk15_carry<F: FnMut(f64) -> (f64, f64)>(f: &mut F, a: f64, b: f64) -> PanelEval {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let (fc, cc) = f(center);
    let mut res_gauss = fc * WG[3];
    let mut res_kronrod = fc * WGK[7];
    let mut res_abs = res_kronrod.abs();
    let mut carry = cc.abs() * WGK[7];

    let mut fv1 = [0.0f64; 8];
    let mut fv2 = [0.0f64; 8];
    fv1[7] = fc;

    for j in 0..7 {
        let dx = half * XGK[j];
        let (f1, c1) = f(center - dx);
        let (f2, c2) = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        let fsum = f1 + f2;
        res_kronrod += WGK[j] * fsum;
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        carry += WGK[j] * (c1.abs() + c2.abs());
        if j % 2 != 0 {
            res_gauss += WG[j / 2] * fsum;
        }
    }

    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let abs_half = half.abs();
    let raw_err = ((res_kronrod - res_gauss) * half).abs();
    let res_abs_scaled = res_abs * abs_half;
    let res_asc_scaled = res_asc * abs_half;

    let mut error = raw_err;
    if res_asc_scaled != 0.0 && error != 0.0 {
        let scale = (200.0 * error / res_asc_scaled).powf(1.5);
        error = if scale < 1.0 {
            res_asc_scaled * scale
        } else {
            res_asc_scaled
        };
    }
    if res_abs_scaled > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs_scaled);
    }

    PanelEval {
        value: res_kronrod * half,
        error,
        carry: carry * abs_half,
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    carry: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

pub(crate) struct AdaptOutcome {
    pub value: f64,
    pub error: f64,
    pub carry: f64,
}

/// Worst-panel-first refinement over an initial partition.
pub(crate) fn adapt_segments<F: FnMut(f64) -> (f64, f64)>(
    f: &mut F,
    segments: &[(f64, f64)],
    spec: &QuadratureSpec,
) -> Result<AdaptOutcome, NumericsError> {
    let mut heap: BinaryHeap<Panel> = BinaryHeap::new();
    let mut value_sum = 0.0;
    let mut error_sum = 0.0;
    let mut carry_sum = 0.0;
    // Contributions of panels too narrow to split further.
    let mut frozen_value = 0.0;
    let mut frozen_error = 0.0;
    let mut frozen_carry = 0.0;

    let push = |heap: &mut BinaryHeap<Panel>,
                    value_sum: &mut f64,
                    error_sum: &mut f64,
                    carry_sum: &mut f64,
                    a: f64,
                    b: f64,
                    eval: PanelEval| {
        *value_sum += eval.value;
        *error_sum += eval.error;
        *carry_sum += eval.carry;
        heap.push(Panel {
            a,
            b,
            value: eval.value,
            error: eval.error,
            carry: eval.carry,
        });
    };

    for &(a, b) in segments {
        if a == b {
            continue;
        }
        let eval = qk15_carry(f, a, b);
        push(&mut heap, &mut value_sum, &mut error_sum, &mut carry_sum, a, b, eval);
    }

    let mut splits = 0usize;
    loop {
        let total_value = value_sum + frozen_value;
        let total_error = error_sum + frozen_error + carry_sum + frozen_carry;
        let tol = spec.abs_tol.max(spec.rel_tol * total_value.abs());
        if total_error <= tol {
            return Ok(AdaptOutcome {
                value: total_value,
                error: error_sum + frozen_error,
                carry: carry_sum + frozen_carry,
            });
        }

        let Some(worst) = heap.pop() else {
            return Err(NumericsError::NonConvergence {
                best: total_value,
                error_estimate: total_error,
                subdivisions: splits,
            });
        };

        let mid = 0.5 * (worst.a + worst.b);
        let splittable = mid > worst.a.min(worst.b) && mid < worst.a.max(worst.b);
        if !splittable || worst.error == 0.0 {
            value_sum -= worst.value;
            error_sum -= worst.error;
            carry_sum -= worst.carry;
            frozen_value += worst.value;
            frozen_error += worst.error;
            frozen_carry += worst.carry;
            continue;
        }

        if splits >= spec.max_subdivisions {
            return Err(NumericsError::NonConvergence {
                best: total_value,
                error_estimate: total_error,
                subdivisions: splits,
            });
        }
        splits += 1;

        value_sum -= worst.value;
        error_sum -= worst.error;
        carry_sum -= worst.carry;
        let left = qk15_carry(f, worst.a, mid);
        let right = qk15_carry(f, mid, worst.b);
        push(&mut heap, &mut value_sum, &mut error_sum, &mut carry_sum, worst.a, mid, left);
        push(&mut heap, &mut value_sum, &mut error_sum, &mut carry_sum, mid, worst.b, right);
    }
}

/// Geometrically graded partition of [a, b] toward the given endpoint,
/// suited to integrable logarithmic endpoint singularities.
fn graded_segments(a: f64, b: f64, endpoint: LogEndpoint) -> Vec<(f64, f64)> {
    const LEVELS: i32 = 45;
    let width = b - a;
    let mut segs = Vec::with_capacity(LEVELS as usize + 1);
    match endpoint {
        LogEndpoint::Lower => {
            segs.push((a, a + width * 2f64.powi(-LEVELS)));
            for k in (0..LEVELS).rev() {
                segs.push((a + width * 2f64.powi(-k - 1), a + width * 2f64.powi(-k)));
            }
        }
        LogEndpoint::Upper => {
            for k in 0..LEVELS {
                segs.push((b - width * 2f64.powi(-k), b - width * 2f64.powi(-k - 1)));
            }
            segs.push((b - width * 2f64.powi(-LEVELS), b));
        }
    }
    segs
}

fn finish(outcome: AdaptOutcome) -> QuadEstimate {
    QuadEstimate {
        value: outcome.value,
        error_estimate: outcome.error + outcome.carry,
    }
}

/// Adaptive quadrature of `f` over `[a, b]`; `b = f64::INFINITY` selects
/// the semi-infinite map `x = a + u/(1-u)`.
pub fn quad_adaptive_1d<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadEstimate, NumericsError> {
    if b.is_infinite() {
        let mut g = |u: f64| {
            let w = 1.0 - u;
            (f(a + u / w) / (w * w), 0.0)
        };
        return adapt_segments(&mut g, &[(0.0, 1.0)], spec).map(finish);
    }
    let mut g = |x: f64| (f(x), 0.0);
    adapt_segments(&mut g, &[(a, b)], spec).map(finish)
}

/// Adaptive quadrature over a finite `[a, b]` whose declared endpoint
/// carries an integrable logarithmic singularity.
pub fn quad_adaptive_1d_log<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
    endpoint: LogEndpoint,
) -> Result<QuadEstimate, NumericsError> {
    let mut g = |x: f64| (f(x), 0.0);
    adapt_segments(&mut g, &graded_segments(a, b, endpoint), spec).map(finish)
}

/// Nested 2D quadrature: an outer adaptive pass over `[outer_a, outer_b]`
/// whose integrand is an inner adaptive pass over
/// `inner_limits(outer) = (lo, hi)`. The combined error estimate includes
/// the integrated inner estimates.
pub fn quad_nested_2d<F, L>(
    f: F,
    outer_a: f64,
    outer_b: f64,
    inner_limits: L,
    spec: &QuadratureSpec,
) -> Result<QuadEstimate, NumericsError>
where
    F: Fn(f64, f64) -> f64,
    L: Fn(f64) -> (f64, f64),
{
    quad_nested_2d_carry(|x, y| (f(x, y), 0.0), outer_a, outer_b, inner_limits, spec, None)
}

/// [`quad_nested_2d`] for integrands that carry a subordinate error channel
/// (for example a third integration level), with an optional declared
/// logarithmic endpoint of the inner domain.
pub fn quad_nested_2d_carry<F, L>(
    f: F,
    outer_a: f64,
    outer_b: f64,
    inner_limits: L,
    spec: &QuadratureSpec,
    inner_log: Option<LogEndpoint>,
) -> Result<QuadEstimate, NumericsError>
where
    F: Fn(f64, f64) -> (f64, f64),
    L: Fn(f64) -> (f64, f64),
{
    let outer_width = (outer_b - outer_a).abs().max(1.0);
    let inner_spec = QuadratureSpec {
        abs_tol: 0.25 * spec.abs_tol / outer_width,
        rel_tol: 0.25 * spec.rel_tol,
        ..spec.clone()
    };

    let mut g = |x: f64| {
        let (lo, hi) = inner_limits(x);
        if !(lo < hi) {
            return (0.0, 0.0);
        }
        let mut inner = |y: f64| f(x, y);
        let segments = match inner_log {
            Some(endpoint) => graded_segments(lo, hi, endpoint),
            None => vec![(lo, hi)],
        };
        match adapt_segments(&mut inner, &segments, &inner_spec) {
            Ok(out) => (out.value, out.error + out.carry),
            // Absorb an inner panel-budget stall: keep its best estimate
            // and its (above-tolerance) error in the outer error budget.
            Err(NumericsError::NonConvergence {
                best,
                error_estimate,
                ..
            }) => (best, error_estimate),
            Err(_) => (f64::NAN, f64::INFINITY),
        }
    };
    adapt_segments(&mut g, &[(outer_a, outer_b)], spec).map(finish)
}
