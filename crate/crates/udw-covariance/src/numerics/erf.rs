//! Error-function helpers backing test oracles and Gaussian tail bounds.

/// Complementary error function.
pub fn erfc(x: f64) -> f64 {
    if x < 0.0 {
        return 2.0 - erfc(-x);
    }
    if x <= 3.0 {
        1.0 - erf_small(x)
    } else {
        erfc_continued_fraction(x)
    }
}

/// Error function.
pub fn erf(x: f64) -> f64 {
    if x.abs() <= 3.0 {
        if x < 0.0 {
            -erf_small(-x)
        } else {
            erf_small(x)
        }
    } else {
        1.0f64.copysign(x) * (1.0 - erfc(x.abs()))
    }
}

/// erf via the all-positive-term expansion
/// `erf(x) = (2/sqrt(pi)) e^{-x^2} sum_n (2x^2)^n x / (2n+1)!!`.
fn erf_small(x: f64) -> f64 {
    let two_x2 = 2.0 * x * x;
    let mut term = x;
    let mut sum = x;
    let mut odd = 1.0;
    for _ in 0..200 {
        odd += 2.0;
        term *= two_x2 / odd;
        sum += term;
        if term <= f64::EPSILON * sum {
            break;
        }
    }
    2.0 / std::f64::consts::PI.sqrt() * (-x * x).exp() * sum
}

/// erfc via the Laplace continued fraction
/// `erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))`.
fn erfc_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for k in 1..200u32 {
        let a = f64::from(k) * 0.5;
        b = x;
        d = a * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x * x).exp() / std::f64::consts::PI.sqrt() * h
}
