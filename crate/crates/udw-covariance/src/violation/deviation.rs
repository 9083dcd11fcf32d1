//! Second-order detector-state deviations driven by the frame
//! discrepancy: `lambda^2 [sigma_z, rho_0] Tr rho_phi E` for one detector,
//! and its Kronecker-structured sum over detectors for product initial
//! states.

use super::{ViolationError, ViolationResult};
use crate::detector::{commutator_with_sigma_z, DetectorConfig, QubitState};
use ndarray::Array2;
use num_complex::Complex64;

/// Largest detector count handled by the dense tensor-product
/// construction.
pub const MAX_DETECTORS: usize = 6;

/// The second-order deviation between evolving with two different time
/// parameters, kept as the coupling-free coefficient matrix together with
/// the coupling it may be reported at.
///
/// The coefficient is Hermitian and traceless: it is the product of an
/// anti-Hermitian commutator with a purely imaginary scalar.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviationMatrix {
    coeff: Array2<Complex64>,
    lambda: f64,
}

impl DeviationMatrix {
    fn new(coeff: Array2<Complex64>, lambda: f64) -> Self {
        debug_assert!(hermitian_defect(&coeff) <= 1e-10, "coefficient not Hermitian");
        debug_assert!(trace_norm(&coeff) <= 1e-10, "coefficient not traceless");
        Self { coeff, lambda }
    }

    /// The lambda^2 coefficient of the deviation.
    pub fn coeff(&self) -> &Array2<Complex64> {
        &self.coeff
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The deviation at the stored coupling: `lambda^2 * coeff`.
    pub fn full(&self) -> Array2<Complex64> {
        let scale = Complex64::new(self.lambda * self.lambda, 0.0);
        self.coeff.mapv(|z| z * scale)
    }
}

pub(crate) fn hermitian_defect(m: &Array2<Complex64>) -> f64 {
    let n = m.nrows();
    let mut defect = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            defect = defect.max((m[[i, j]] - m[[j, i]].conj()).norm());
        }
    }
    defect
}

pub(crate) fn trace_norm(m: &Array2<Complex64>) -> f64 {
    (0..m.nrows())
        .map(|i| m[[i, i]])
        .sum::<Complex64>()
        .norm()
}

/// Kronecker product of dense complex matrices.
pub(crate) fn kron(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Array2<Complex64> {
    let (ra, ca) = a.dim();
    let (rb, cb) = b.dim();
    let mut out = Array2::zeros((ra * rb, ca * cb));
    for i in 0..ra {
        for j in 0..ca {
            let aij = a[[i, j]];
            for k in 0..rb {
                for l in 0..cb {
                    out[[i * rb + k, j * cb + l]] = aij * b[[k, l]];
                }
            }
        }
    }
    out
}

/// Deviation for a single detector: coefficient `[sigma_z, rho_0] * value`.
///
/// Exactly zero (not merely small) for energy-diagonal initial states,
/// since the commutator vanishes entrywise.
pub fn single_detector_deviation(
    rho0: &QubitState,
    violation: &ViolationResult,
    lambda: f64,
) -> DeviationMatrix {
    let coeff = commutator_with_sigma_z(rho0).mapv(|z| z * violation.value);
    DeviationMatrix::new(coeff, lambda)
}

/// Deviation for `N` detectors starting in a product state: the sum over
/// detectors of the single-detector coefficient embedded at its slot in
/// the tensor product, all other slots carrying the initial states.
///
/// Reduces exactly to [`single_detector_deviation`] at `N = 1`.
pub fn multi_detector_deviation(
    detectors: &[(DetectorConfig, QubitState)],
    violations: &[ViolationResult],
    lambda_common: f64,
) -> Result<DeviationMatrix, ViolationError> {
    let n = detectors.len();
    if n != violations.len() {
        return Err(ViolationError::MismatchedLengths {
            detectors: n,
            violations: violations.len(),
        });
    }
    if n == 0 || n > MAX_DETECTORS {
        return Err(ViolationError::DetectorCountOutOfRange {
            got: n,
            max: MAX_DETECTORS,
        });
    }

    let dim = 1usize << n;
    let mut sum: Array2<Complex64> = Array2::zeros((dim, dim));
    for (i, violation) in violations.iter().enumerate() {
        let mut term: Array2<Complex64> = Array2::eye(1);
        for (j, (_, rho)) in detectors.iter().enumerate() {
            let factor = if i == j {
                commutator_with_sigma_z(rho).mapv(|z| z * violation.value)
            } else {
                rho.rho().clone()
            };
            term = kron(&term, &factor);
        }
        sum += &term;
    }
    Ok(DeviationMatrix::new(sum, lambda_common))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::violation::{EvalPath, ViolationParams};
    use ndarray::array;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn fake_violation(im: f64) -> ViolationResult {
        ViolationResult {
            value: c(0.0, im),
            error_estimate: 0.0,
            path: EvalPath::EiClosedForm2d,
            params: ViolationParams::Dimensionless {
                v: 0.5,
                t_over_ell: 1.0,
                omega_t: 1.0,
            },
        }
    }

    fn config() -> DetectorConfig {
        DetectorConfig::gaussian(1.0, 0.01, 1.0, 1.0, 0.5).unwrap()
    }

    #[test]
    fn diagonal_states_give_the_exact_zero_matrix() {
        let violation = fake_violation(-2.5e-3);
        for p in [0.0, 0.3, 0.5, 1.0] {
            let rho = QubitState::diagonal(p).unwrap();
            let dev = single_detector_deviation(&rho, &violation, 0.1);
            assert!(dev.coeff().iter().all(|z| z.norm() == 0.0));
            assert!(dev.full().iter().all(|z| z.norm() == 0.0));
        }
    }

    #[test]
    fn zero_coupling_zeroes_the_full_deviation() {
        let dev = single_detector_deviation(&QubitState::plus_state(), &fake_violation(-1e-3), 0.0);
        assert!(dev.full().iter().all(|z| z.norm() == 0.0));
        assert!(dev.coeff().iter().any(|z| z.norm() > 0.0));
    }

    #[test]
    fn plus_state_matches_the_two_by_two_oracle() {
        // [sigma_z, |+><+|] = [[0, 1], [-1, 0]]; times i c gives
        // [[0, i c], [-i c, 0]], Hermitian for real c.
        let cval = -3.0e-3;
        let dev = single_detector_deviation(&QubitState::plus_state(), &fake_violation(cval), 2.0);
        let expected = array![
            [c(0.0, 0.0), c(0.0, cval)],
            [c(0.0, -cval), c(0.0, 0.0)]
        ];
        assert_eq!(dev.coeff(), &expected);
        let full = dev.full();
        assert_eq!(full[[0, 1]], c(0.0, 4.0 * cval));
    }

    #[test]
    fn multi_reduces_to_single_for_one_detector() {
        let violation = fake_violation(-1.7e-3);
        let rho = QubitState::from_bloch(0.3, 0.2, -0.4).unwrap();
        let single = single_detector_deviation(&rho, &violation, 0.05);
        let multi = multi_detector_deviation(
            &[(config(), rho.clone())],
            std::slice::from_ref(&violation),
            0.05,
        )
        .unwrap();
        assert_eq!(single.coeff(), multi.coeff());
    }

    #[test]
    fn two_detectors_one_diagonal_leaves_one_term() {
        // rho_1 = |+><+| (off-diagonal), rho_2 = |e><e| (diagonal): only
        // the i = 1 term survives, and it equals
        // kron([sigma_z, rho_1] * value_1, rho_2).
        let v1 = fake_violation(-2.0e-3);
        let v2 = fake_violation(-5.0e-4);
        let rho1 = QubitState::plus_state();
        let rho2 = QubitState::diagonal(1.0).unwrap();
        let dev = multi_detector_deviation(
            &[(config(), rho1.clone()), (config(), rho2.clone())],
            &[v1.clone(), v2],
            0.1,
        )
        .unwrap();
        let expected = kron(
            &crate::detector::commutator_with_sigma_z(&rho1).mapv(|z| z * v1.value),
            rho2.rho(),
        );
        assert_eq!(dev.coeff(), &expected);
    }

    #[test]
    fn multi_matches_dense_brute_force_up_to_three() {
        // Independent construction: embed sigma_z at slot i by explicit
        // Kronecker products with identities, commute with the full
        // product state, and sum.
        let states = [
            QubitState::from_bloch(0.2, -0.1, 0.3).unwrap(),
            QubitState::from_bloch(-0.5, 0.4, 0.1).unwrap(),
            QubitState::from_bloch(0.0, 0.6, -0.2).unwrap(),
        ];
        let violations = [fake_violation(-1e-3), fake_violation(2e-3), fake_violation(-4e-4)];

        for n in 1..=3usize {
            let pairs: Vec<_> = states[..n]
                .iter()
                .map(|s| (config(), s.clone()))
                .collect();
            let dev = multi_detector_deviation(&pairs, &violations[..n], 1.0).unwrap();

            let eye = Array2::<Complex64>::eye(2);
            let mut rho_full: Array2<Complex64> = Array2::eye(1);
            for s in &states[..n] {
                rho_full = kron(&rho_full, s.rho());
            }
            let dim = 1usize << n;
            let mut brute: Array2<Complex64> = Array2::zeros((dim, dim));
            for i in 0..n {
                let mut sz_i: Array2<Complex64> = Array2::eye(1);
                for j in 0..n {
                    let factor = if i == j { crate::detector::sigma_z() } else { eye.clone() };
                    sz_i = kron(&sz_i, &factor);
                }
                let comm = sz_i.dot(&rho_full) - rho_full.dot(&sz_i);
                brute += &comm.mapv(|z| z * violations[i].value);
            }

            let max_diff = dev
                .coeff()
                .iter()
                .zip(brute.iter())
                .map(|(a, b)| (a - b).norm())
                .fold(0.0f64, f64::max);
            assert!(max_diff <= 1e-12, "n = {n}: diff {max_diff:e}");
        }
    }

    #[test]
    fn list_validation() {
        let rho = QubitState::plus_state();
        let v = fake_violation(-1e-3);
        assert!(matches!(
            multi_detector_deviation(&[(config(), rho.clone())], &[], 0.1),
            Err(ViolationError::MismatchedLengths { .. })
        ));
        assert!(matches!(
            multi_detector_deviation(&[], &[], 0.1),
            Err(ViolationError::DetectorCountOutOfRange { .. })
        ));
        let seven: Vec<_> = (0..7).map(|_| (config(), rho.clone())).collect();
        let vs: Vec<_> = (0..7).map(|_| v.clone()).collect();
        assert!(matches!(
            multi_detector_deviation(&seven, &vs, 0.1),
            Err(ViolationError::DetectorCountOutOfRange { got: 7, max: 6 })
        ));
    }

    #[test]
    fn coefficients_are_hermitian_and_traceless() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let r: f64 = rng.gen_range(0.0..1.0);
            let (theta, phi): (f64, f64) = (
                rng.gen_range(0.0..std::f64::consts::PI),
                rng.gen_range(0.0..2.0 * std::f64::consts::PI),
            );
            let rho = QubitState::from_bloch(
                r * theta.sin() * phi.cos(),
                r * theta.sin() * phi.sin(),
                r * theta.cos(),
            )
            .unwrap();
            let dev = single_detector_deviation(&rho, &fake_violation(rng.gen_range(-1e-2..0.0)), 0.3);
            assert!(hermitian_defect(dev.coeff()) <= 1e-10);
            assert!(trace_norm(dev.coeff()) <= 1e-10);
        }
    }
}
