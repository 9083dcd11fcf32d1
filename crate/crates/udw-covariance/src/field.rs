//! Field-state descriptors and the closed-form Wightman function of the
//! massless vacuum at spacelike separation.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FieldError {
    #[error(
        "spacelike Wightman form evaluated at non-spacelike squared interval {interval_sq}; \
         the closed form holds only for interval_sq > 0"
    )]
    NonSpacelikeInterval { interval_sq: f64 },
}

/// State of the scalar field. The kind fixes every correlation function;
/// the massless 3+1 vacuum has no free parameters and is stationary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldState {
    MasslessVacuum3p1,
}

impl FieldState {
    pub fn is_stationary(&self) -> bool {
        match self {
            FieldState::MasslessVacuum3p1 => true,
        }
    }
}

/// Invariant squared interval in detector-frame separations:
/// `-sigma^2 + xi^2 + r_perp^2` for a proper-time separation `sigma`,
/// boost-axis separation `xi`, and transverse separation magnitude
/// `r_perp >= 0`.
pub fn interval_sq_detector_frame(sigma: f64, xi: f64, r_perp: f64) -> f64 {
    debug_assert!(r_perp >= 0.0, "transverse separation magnitude is non-negative");
    -sigma * sigma + xi * xi + r_perp * r_perp
}

/// Massless-vacuum Wightman function at spacelike separation:
/// `1 / (2 pi^2 interval_sq)`, strictly positive and real.
pub fn wightman_spacelike(interval_sq: f64, state: &FieldState) -> Result<f64, FieldError> {
    let FieldState::MasslessVacuum3p1 = state;
    if !(interval_sq > 0.0) {
        return Err(FieldError::NonSpacelikeInterval { interval_sq });
    }
    Ok(1.0 / (2.0 * std::f64::consts::PI * std::f64::consts::PI * interval_sq))
}
