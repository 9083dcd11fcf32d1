//! Detector configuration, Gaussian switching and smearing profiles, the
//! spacetime smearing they factor into, and the qubit-level operators of a
//! two-level monopole detector.
//!
//! Energy-basis convention: the computational basis is `{|e>, |g>}` with
//! the excited state first, so `sigma_z = diag(1, -1)` and the free gap
//! Hamiltonian is `Omega sigma_plus sigma_minus`. Sign-sensitive results
//! (commutators, deviation matrices) assume this ordering.

use ndarray::{array, Array2};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DetectorError {
    #[error("invalid detector config: {0}")]
    InvalidConfig(String),
    #[error(
        "smearing profile requested for a pointlike detector; pointlike \
         couplings must go through the analytic delta-limit paths instead"
    )]
    PointlikeSmearing,
    #[error("invalid qubit state: {0}")]
    InvalidState(String),
}

/// Spatial profile of the detector-field coupling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmearingKind {
    Gaussian,
    Pointlike,
}

/// Static parameters of one inertial detector.
#[derive(Debug, Clone, PartialEq)]
pub struct DetectorConfig {
    omega: f64,
    lambda: f64,
    t_switch: f64,
    ell: f64,
    v: f64,
    smearing_kind: SmearingKind,
}

impl DetectorConfig {
    /// A Gaussian-smeared detector with proper gap `omega`, coupling
    /// `lambda`, switching timescale `t_switch`, smearing lengthscale
    /// `ell`, and center-of-mass speed `v` along x relative to the lab.
    pub fn gaussian(
        omega: f64,
        lambda: f64,
        t_switch: f64,
        ell: f64,
        v: f64,
    ) -> Result<Self, DetectorError> {
        let cfg = Self {
            omega,
            lambda,
            t_switch,
            ell,
            v,
            smearing_kind: SmearingKind::Gaussian,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// A pointlike detector; the smearing lengthscale is absent and every
    /// smeared-profile operation routes to the analytic delta-limit paths.
    pub fn pointlike(
        omega: f64,
        lambda: f64,
        t_switch: f64,
        v: f64,
    ) -> Result<Self, DetectorError> {
        let cfg = Self {
            omega,
            lambda,
            t_switch,
            ell: 0.0,
            v,
            smearing_kind: SmearingKind::Pointlike,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), DetectorError> {
        if !(self.omega.is_finite() && self.omega >= 0.0) {
            return Err(DetectorError::InvalidConfig(format!(
                "gap omega must be finite and non-negative (got {})",
                self.omega
            )));
        }
        if !self.lambda.is_finite() {
            return Err(DetectorError::InvalidConfig("coupling must be finite".into()));
        }
        if !(self.t_switch.is_finite() && self.t_switch > 0.0) {
            return Err(DetectorError::InvalidConfig(format!(
                "switching timescale must be positive (got {})",
                self.t_switch
            )));
        }
        if self.smearing_kind == SmearingKind::Gaussian && !(self.ell.is_finite() && self.ell > 0.0)
        {
            return Err(DetectorError::InvalidConfig(format!(
                "Gaussian smearing lengthscale must be positive (got {})",
                self.ell
            )));
        }
        if !(self.v.is_finite() && self.v.abs() < 1.0) {
            return Err(DetectorError::InvalidConfig(format!(
                "center-of-mass speed must satisfy |v| < 1 (got {})",
                self.v
            )));
        }
        Ok(())
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn t_switch(&self) -> f64 {
        self.t_switch
    }

    /// Smearing lengthscale; only meaningful for Gaussian smearing.
    pub fn ell(&self) -> f64 {
        self.ell
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn smearing_kind(&self) -> SmearingKind {
        self.smearing_kind
    }
}

/// Gaussian switching profile `chi(tau) = exp(-tau^2/2T^2) / sqrt(2 pi)`.
///
/// The prefactor carries no factor of T, so the profile peaks at
/// `1/sqrt(2 pi)` regardless of the timescale.
pub fn switching(tau: f64, config: &DetectorConfig) -> f64 {
    let t = config.t_switch;
    (-tau * tau / (2.0 * t * t)).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Normalized spherical Gaussian smearing profile
/// `f(xbar) = exp(-|xbar|^2/2 l^2) / ((2 pi)^{3/2} l^3)` in the detector
/// rest frame.
pub fn smearing(xbar: [f64; 3], config: &DetectorConfig) -> Result<f64, DetectorError> {
    if config.smearing_kind == SmearingKind::Pointlike {
        return Err(DetectorError::PointlikeSmearing);
    }
    let l2 = config.ell * config.ell;
    let r2 = xbar[0] * xbar[0] + xbar[1] * xbar[1] + xbar[2] * xbar[2];
    Ok((-r2 / (2.0 * l2)).exp() / ((2.0 * std::f64::consts::PI).powi(3).sqrt() * config.ell.powi(3)))
}

/// Spacetime smearing in the detector's rest frame: the product
/// `chi(tau) f(xbar)` of the switching and smearing profiles.
pub fn spacetime_smearing(
    tau: f64,
    xbar: [f64; 3],
    config: &DetectorConfig,
) -> Result<f64, DetectorError> {
    Ok(switching(tau, config) * smearing(xbar, config)?)
}

/// Real coefficient of `i sigma_z` in the commutator of the monopole
/// coupling operator with itself at two proper times: `2 sin(Omega (tau -
/// tau'))`. Vanishes only on the discrete set `Omega (tau - tau') = n pi`.
pub fn monopole_commutator_kernel(tau: f64, tau_prime: f64, omega: f64) -> f64 {
    2.0 * (omega * (tau - tau_prime)).sin()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `sigma_z = diag(1, -1)` in the `{|e>, |g>}` basis.
pub fn sigma_z() -> Array2<Complex64> {
    array![[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]]
}

/// Raising operator `|e><g|`.
pub fn sigma_plus() -> Array2<Complex64> {
    array![[c(0.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]
}

/// Lowering operator `|g><e|`.
pub fn sigma_minus() -> Array2<Complex64> {
    array![[c(0.0, 0.0), c(0.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
}

/// Single-qubit density matrix in the energy eigenbasis: Hermitian within
/// 1e-12, unit trace within 1e-12, eigenvalues above -1e-12.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitState {
    rho: Array2<Complex64>,
}

impl QubitState {
    pub const HERMITICITY_TOL: f64 = 1e-12;

    pub fn new(rho: Array2<Complex64>) -> Result<Self, DetectorError> {
        if rho.dim() != (2, 2) {
            return Err(DetectorError::InvalidState(format!(
                "density matrix must be 2x2 (got {:?})",
                rho.dim()
            )));
        }
        for v in rho.iter() {
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(DetectorError::InvalidState("non-finite entry".into()));
            }
        }
        let herm = (rho[[0, 1]] - rho[[1, 0]].conj()).norm()
            + rho[[0, 0]].im.abs()
            + rho[[1, 1]].im.abs();
        if herm > Self::HERMITICITY_TOL {
            return Err(DetectorError::InvalidState(format!(
                "not Hermitian (defect {herm:e})"
            )));
        }
        let trace = rho[[0, 0]].re + rho[[1, 1]].re;
        if (trace - 1.0).abs() > Self::HERMITICITY_TOL {
            return Err(DetectorError::InvalidState(format!(
                "trace must be 1 (got {trace})"
            )));
        }
        // Closed-form spectrum of a Hermitian 2x2 matrix.
        let half_diff = 0.5 * (rho[[0, 0]].re - rho[[1, 1]].re);
        let disc = (half_diff * half_diff + rho[[0, 1]].norm_sqr()).sqrt();
        let eig_min = 0.5 * trace - disc;
        if eig_min < -Self::HERMITICITY_TOL {
            return Err(DetectorError::InvalidState(format!(
                "negative eigenvalue {eig_min:e}"
            )));
        }
        Ok(Self { rho })
    }

    /// Energy-diagonal mixture `p |e><e| + (1-p) |g><g|`.
    pub fn diagonal(p_excited: f64) -> Result<Self, DetectorError> {
        if !(0.0..=1.0).contains(&p_excited) {
            return Err(DetectorError::InvalidState(format!(
                "population must lie in [0, 1] (got {p_excited})"
            )));
        }
        Self::new(array![
            [c(p_excited, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0 - p_excited, 0.0)]
        ])
    }

    /// The equal superposition `|+><+|` with `|+> = (|e> + |g>)/sqrt(2)`.
    pub fn plus_state() -> Self {
        Self::new(array![
            [c(0.5, 0.0), c(0.5, 0.0)],
            [c(0.5, 0.0), c(0.5, 0.0)]
        ])
        .expect("|+><+| is a valid state")
    }

    /// State with Bloch vector `(rx, ry, rz)`, `|r| <= 1`:
    /// `rho = (I + r . sigma)/2`.
    pub fn from_bloch(rx: f64, ry: f64, rz: f64) -> Result<Self, DetectorError> {
        let norm = (rx * rx + ry * ry + rz * rz).sqrt();
        if norm > 1.0 + 1e-14 {
            return Err(DetectorError::InvalidState(format!(
                "Bloch vector norm {norm} exceeds 1"
            )));
        }
        Self::new(array![
            [c(0.5 * (1.0 + rz), 0.0), 0.5 * c(rx, -ry)],
            [0.5 * c(rx, ry), c(0.5 * (1.0 - rz), 0.0)]
        ])
    }

    pub fn rho(&self) -> &Array2<Complex64> {
        &self.rho
    }

    /// Whether the state is diagonal in the energy basis (commutes with
    /// the free Hamiltonian).
    pub fn is_energy_diagonal(&self) -> bool {
        self.rho[[0, 1]].norm() == 0.0 && self.rho[[1, 0]].norm() == 0.0
    }
}

/// `[sigma_z, rho] = sigma_z rho - rho sigma_z`: anti-Hermitian, traceless,
/// and exactly zero iff `rho` is diagonal in the energy basis.
pub fn commutator_with_sigma_z(state: &QubitState) -> Array2<Complex64> {
    let sz = sigma_z();
    sz.dot(state.rho()) - state.rho().dot(&sz)
}
