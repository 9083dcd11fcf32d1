//! Numerical engine for the frame dependence of spatially smeared
//! Unruh-DeWitt detector models in flat spacetime.
//!
//! A pointlike detector couples to a quantum field along a single timelike
//! worldline, so every foliation of spacetime agrees on the time order of
//! the interaction events. A detector with finite spatial extent couples at
//! spacelike-separated points, and there the time order depends on the
//! frame: the time-ordered evolution generated in the detector's rest frame
//! differs from the one generated in the lab frame at second order in the
//! coupling. This crate evaluates the scalar magnitude of that discrepancy
//! (the field-state trace of the frame-discrepancy operator, written
//! `Tr rho_phi E` throughout) together with the resulting detector-state
//! deviation, for inertial detectors with Gaussian switching and smearing
//! coupled to the massless vacuum.
//!
//! The crate is organized around mutually cross-validating evaluation
//! paths:
//!
//! * [`violation::trace_e_reference_mc`] - seeded Monte-Carlo estimate of
//!   the defining eight-dimensional integral; the reference all reduced
//!   paths are calibrated against.
//! * [`violation::trace_e_reduced3d`] - nested quadrature of the
//!   three-dimensional reduction (analytic switching and transverse
//!   integrals).
//! * [`violation::trace_e_ei_2d`] - two-dimensional quadrature with the
//!   radial integral replaced by its exponential-integral closed form.
//! * [`violation::trace_e_dimensionless`] - the same object as a function
//!   of the dimensionless triple `(v, T/l, Omega*T)` alone.
//!
//! Supporting modules: [`geometry`] (Minkowski interval algebra, boosts
//! along x, and the order-flipping region between two inertial foliations),
//! [`detector`] (profiles, the monopole commutator kernel, qubit states),
//! [`field`] (the spacelike massless-vacuum Wightman function), and
//! [`numerics`] (exponential integral, adaptive Gauss-Kronrod quadrature,
//! and the seeded Monte-Carlo engine).
//!
//! With the default `parallel` feature the Monte-Carlo estimator fans out
//! across a rayon pool; chunked counter-based random substreams keep the
//! result bit-identical to the sequential fallback for a fixed seed.

pub mod detector;
pub mod field;
pub mod geometry;
pub mod numerics;
pub mod violation;

pub use detector::{DetectorConfig, QubitState, SmearingKind};
pub use field::FieldState;
pub use geometry::{FrameSpec, IntervalClass, SpacetimeEvent};
pub use numerics::{Execution, McEstimate, QuadratureSpec};
pub use violation::{DeviationMatrix, EvalPath, ViolationResult};
