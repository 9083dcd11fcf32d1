//! Minkowski interval algebra, Lorentz boosts along the x axis, and the
//! order-flipping region between two inertial foliations.
//!
//! Every frame here is an inertial foliation obtained by boosting the lab
//! frame along x; events carry their frame explicitly and conversions are
//! explicit operations. Signature convention is (-,+,+,+) with c = 1.

use thiserror::Error;

/// Relative scale factor for the null-classification tolerance: squared
/// intervals within `NULL_TOL_SCALE * max(1, |dt|^2 + |dx|^2)` of zero are
/// classified as null, since the sign of a near-zero `|dx|^2` is unstable
/// in floating point.
pub const NULL_TOL_SCALE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("invalid frame: boost speed {v} is not strictly inside (-1, 1)")]
    InvalidFrame { v: f64 },
    #[error("spacetime event has a non-finite coordinate: {coordinate}")]
    NonFiniteCoordinate { coordinate: f64 },
}

/// An inertial foliation, specified by its boost speed along x relative to
/// the lab frame (`|v| < 1` strictly).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameSpec {
    v: f64,
}

impl FrameSpec {
    pub fn new(v: f64) -> Result<Self, GeometryError> {
        if !(v.is_finite() && v.abs() < 1.0) {
            return Err(GeometryError::InvalidFrame { v });
        }
        Ok(Self { v })
    }

    /// The lab frame itself (zero boost).
    pub fn lab() -> Self {
        Self { v: 0.0 }
    }

    pub fn velocity(&self) -> f64 {
        self.v
    }

    pub fn gamma(&self) -> f64 {
        // The constructor guarantees |v| < 1, so this cannot fail.
        gamma(self.v).expect("FrameSpec invariant violated")
    }
}

/// Lorentz factor `1/sqrt(1 - v^2)`.
///
/// Computed via `(1 - v)(1 + v)` so the factor stays accurate as `|v|`
/// approaches 1; finite for every `|v| <= 1 - 1e-12` and beyond.
pub fn gamma(v: f64) -> Result<f64, GeometryError> {
    if !(v.is_finite() && v.abs() < 1.0) {
        return Err(GeometryError::InvalidFrame { v });
    }
    Ok(1.0 / ((1.0 - v) * (1.0 + v)).sqrt())
}

/// Lab-frame time interval `dt = gamma(v) (dtau + v dxbar)` elapsed between
/// two events given their separation in a frame moving at speed `v`.
pub fn boost_delta_t(delta_tau: f64, delta_xbar: f64, v: f64) -> Result<f64, GeometryError> {
    Ok(gamma(v)? * (delta_tau + v * delta_xbar))
}

/// Causal classification of an event pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalClass {
    Timelike,
    Null,
    Spacelike,
}

/// A point in 3+1 Minkowski space, with coordinates referring to the
/// declared frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimeEvent {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub frame: FrameSpec,
}

impl SpacetimeEvent {
    pub fn new(t: f64, x: f64, y: f64, z: f64, frame: FrameSpec) -> Result<Self, GeometryError> {
        for c in [t, x, y, z] {
            if !c.is_finite() {
                return Err(GeometryError::NonFiniteCoordinate { coordinate: c });
            }
        }
        Ok(Self { t, x, y, z, frame })
    }

    /// The same event with coordinates expressed in the lab frame.
    pub fn to_lab(&self) -> SpacetimeEvent {
        let v = self.frame.v;
        let g = self.frame.gamma();
        SpacetimeEvent {
            t: g * (self.t + v * self.x),
            x: g * (self.x + v * self.t),
            y: self.y,
            z: self.z,
            frame: FrameSpec::lab(),
        }
    }

    /// The same event with coordinates expressed in `frame`.
    pub fn to_frame(&self, frame: FrameSpec) -> SpacetimeEvent {
        let lab = self.to_lab();
        let u = frame.v;
        let g = frame.gamma();
        SpacetimeEvent {
            t: g * (lab.t - u * lab.x),
            x: g * (lab.x - u * lab.t),
            y: lab.y,
            z: lab.z,
            frame,
        }
    }
}

/// Lab-frame coordinate differences `a - b`.
fn lab_delta(a: &SpacetimeEvent, b: &SpacetimeEvent) -> (f64, f64, f64, f64) {
    let (al, bl) = (a.to_lab(), b.to_lab());
    (al.t - bl.t, al.x - bl.x, al.y - bl.y, al.z - bl.z)
}

/// Classify the pair `(a, b)` by the sign of the invariant squared interval
/// `|dx|^2 = -dt^2 + dx^2 + dy^2 + dz^2`, evaluated in the lab frame.
///
/// Values within `NULL_TOL_SCALE * max(1, dt^2 + dx^2 + dy^2 + dz^2)` of
/// zero are Null.
pub fn classify_interval(a: &SpacetimeEvent, b: &SpacetimeEvent) -> IntervalClass {
    let (dt, dx, dy, dz) = lab_delta(a, b);
    let spatial = dx * dx + dy * dy + dz * dz;
    let s2 = -dt * dt + spatial;
    let tol = NULL_TOL_SCALE * (dt * dt + spatial).max(1.0);
    if s2.abs() <= tol {
        IntervalClass::Null
    } else if s2 < 0.0 {
        IntervalClass::Timelike
    } else {
        IntervalClass::Spacelike
    }
}

/// Whether the ordered pair `(a, b)` lies in the region where the two
/// foliations disagree on time order: the pair is spacelike, `a` is
/// strictly later than `b` in `frame_tau`, and not later in `frame_t`.
///
/// For `frame_tau` = detector rest frame (speed v) and `frame_t` = lab this
/// reduces to `dxbar < -dtau / v` with `dtau > 0`. Symmetric in neither
/// argument: at most one of `(a, b)` and `(b, a)` is in the region, and for
/// `frame_tau == frame_t` the region is empty.
pub fn in_s_leq(
    a: &SpacetimeEvent,
    b: &SpacetimeEvent,
    frame_tau: FrameSpec,
    frame_t: FrameSpec,
) -> bool {
    if classify_interval(a, b) != IntervalClass::Spacelike {
        return false;
    }
    let (dt, dx, _, _) = lab_delta(a, b);
    // Time order in a frame with boost speed u has the sign of dt - u dx
    // (the positive gamma factor cannot flip it).
    let order_tau = dt - frame_tau.v * dx;
    let order_t = dt - frame_t.v * dx;
    order_tau > 0.0 && order_t <= 0.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn lab_event(t: f64, x: f64, y: f64, z: f64) -> SpacetimeEvent {
        SpacetimeEvent::new(t, x, y, z, FrameSpec::lab()).unwrap()
    }

    #[test]
    fn gamma_identity_and_known_value() {
        assert_eq!(gamma(0.0).unwrap(), 1.0);
        assert_eq!(gamma(0.6).unwrap(), 1.25);
        assert_eq!(gamma(-0.6).unwrap(), 1.25);
    }

    #[test]
    fn gamma_near_light_speed_stays_accurate() {
        // Reference values from a 40-digit evaluation of 1/sqrt((1-v)(1+v)).
        let g = gamma(0.99999).unwrap();
        let expected = 223.6073567695784859799;
        assert!((g - expected).abs() / expected < 1e-14, "gamma = {g}");

        // v = 1 - 2^-40 makes (1-v)(1+v) exactly representable, so the
        // reference below is the correctly rounded value.
        let v = 1.0 - 2f64.powi(-40);
        let g = gamma(v).unwrap();
        let expected = 741455.2001896338443402;
        assert!(g.is_finite());
        assert!((g - expected).abs() / expected < 1e-15, "gamma = {g}");
    }

    #[test]
    fn gamma_rejects_invalid_speeds() {
        assert!(gamma(1.0).is_err());
        assert!(gamma(-1.0).is_err());
        assert!(gamma(1.5).is_err());
        assert!(gamma(f64::NAN).is_err());
    }

    #[test]
    fn boost_delta_t_examples() {
        assert_eq!(boost_delta_t(1.0, 0.0, 0.6).unwrap(), 1.25);
        let dt = boost_delta_t(1.0, -2.0, 0.6).unwrap();
        assert!((dt - (-0.25)).abs() < 1e-15, "dt = {dt}");
        assert_eq!(boost_delta_t(0.0, 5.0, 0.0).unwrap(), 0.0);
        assert!(boost_delta_t(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn classify_axis_examples() {
        let origin = lab_event(0.0, 0.0, 0.0, 0.0);
        let timelike = lab_event(1.0, 0.0, 0.0, 0.0);
        let null = lab_event(1.0, 1.0, 0.0, 0.0);
        let spacelike = lab_event(0.0, 1.0, 0.0, 0.0);
        assert_eq!(classify_interval(&timelike, &origin), IntervalClass::Timelike);
        assert_eq!(classify_interval(&null, &origin), IntervalClass::Null);
        assert_eq!(classify_interval(&spacelike, &origin), IntervalClass::Spacelike);
    }

    #[test]
    fn frame_round_trip_is_consistent() {
        let f = FrameSpec::new(0.73).unwrap();
        let e = SpacetimeEvent::new(1.3, -0.4, 2.0, -5.0, f).unwrap();
        let back = e.to_lab().to_frame(f);
        assert!((back.t - e.t).abs() < 1e-12);
        assert!((back.x - e.x).abs() < 1e-12);
        assert_eq!(back.y, e.y);
        assert_eq!(back.z, e.z);
    }

    #[test]
    fn s_leq_detector_frame_examples() {
        let det = FrameSpec::new(0.6).unwrap();
        let lab = FrameSpec::lab();
        let b = SpacetimeEvent::new(0.0, 0.0, 0.0, 0.0, det).unwrap();

        // dtau = 1, dxbar = -2: spacelike and -2 < -1/0.6.
        let a = SpacetimeEvent::new(1.0, -2.0, 0.0, 0.0, det).unwrap();
        assert!(in_s_leq(&a, &b, det, lab));
        assert!(!in_s_leq(&b, &a, det, lab));

        // dxbar = -1 does not cross the flip boundary.
        let a = SpacetimeEvent::new(1.0, -1.0, 0.0, 0.0, det).unwrap();
        assert!(!in_s_leq(&a, &b, det, lab));

        // Coincident spatial points are timelike for any dtau > 0.
        for v in [0.1, 0.5, 0.9, 0.99] {
            let f = FrameSpec::new(v).unwrap();
            let a = SpacetimeEvent::new(2.0, 0.0, 0.0, 0.0, f).unwrap();
            let b = SpacetimeEvent::new(0.0, 0.0, 0.0, 0.0, f).unwrap();
            assert!(!in_s_leq(&a, &b, f, lab));
        }
    }

    #[test]
    fn s_leq_same_frame_is_empty() {
        let det = FrameSpec::new(0.6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let a = SpacetimeEvent::new(
                rng.gen_range(-5.0..5.0),
                rng.gen_range(-5.0..5.0),
                rng.gen_range(-5.0..5.0),
                rng.gen_range(-5.0..5.0),
                det,
            )
            .unwrap();
            let b = SpacetimeEvent::new(
                rng.gen_range(-5.0..5.0),
                rng.gen_range(-5.0..5.0),
                rng.gen_range(-5.0..5.0),
                rng.gen_range(-5.0..5.0),
                det,
            )
            .unwrap();
            assert!(!in_s_leq(&a, &b, det, det));
            assert!(!(in_s_leq(&a, &b, det, FrameSpec::lab())
                && in_s_leq(&b, &a, det, FrameSpec::lab())));
        }
    }

    #[test]
    fn classification_is_boost_invariant() {
        // Randomized pairs kept away from the null cone, random common
        // boosts up to |u| = 0.95; class and (for causal pairs) time order
        // must agree between the frames.
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut checked = 0usize;
        while checked < 10_000 {
            let a = lab_event(
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
            );
            let b = lab_event(
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
            );
            let (dt, dx, dy, dz) = (a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z);
            let s2 = -dt * dt + dx * dx + dy * dy + dz * dz;
            let scale = (dt * dt + dx * dx + dy * dy + dz * dz).max(1.0);
            if s2.abs() < 1e-6 * scale {
                continue; // too close to the cone for a boosted re-check
            }
            let u = rng.gen_range(-0.95..0.95);
            let f = FrameSpec::new(u).unwrap();
            let (af, bf) = (a.to_frame(f), b.to_frame(f));

            let class_lab = classify_interval(&a, &b);
            let class_boost = classify_interval(&af, &bf);
            assert_eq!(class_lab, class_boost, "u = {u}, s2 = {s2}");

            if class_lab != IntervalClass::Spacelike {
                assert_eq!(
                    (a.t - b.t).signum(),
                    (af.t - bf.t).signum(),
                    "causal order must be frame independent (u = {u})"
                );
            }
            checked += 1;
        }
    }
}
