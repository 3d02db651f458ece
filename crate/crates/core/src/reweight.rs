//! Closed-form expectations of the augmented variables driving each M-step.
//!
//! The hinge and epsilon-insensitive losses admit a scale-mixture
//! representation whose auxiliary variable is generalized inverse Gaussian;
//! only the inverse mean `E[1/lambda] = 1/(c * sqrt(m2))` is ever needed.
//! The logistic loss uses a Polya-Gamma variable whose mean is
//! `(c / (2 z)) * tanh(z / 2)` at tilt `z = sqrt(m2)`. No sampling happens
//! here; samplers exist only in test oracles.

/// Floor applied to second moments before the square root. A perfectly fit
/// zero-variance example would send the hinge/SVR re-weight to infinity;
/// clamping keeps the quadratic M-step bounded.
pub const MOMENT_FLOOR: f64 = 1e-12;

/// A second-order expectation `E[.^2]` of a (corrupted) linear form.
/// Nonnegative by construction; tiny negative rounding noise is clamped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondMoment(f64);

impl SecondMoment {
    pub fn new(value: f64) -> Self {
        debug_assert!(value > -1e-9, "second moment should be nonnegative, got {value}");
        SecondMoment(value.max(0.0))
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    /// Value clamped below by [`MOMENT_FLOOR`].
    pub fn floored(&self) -> f64 {
        self.0.max(MOMENT_FLOOR)
    }
}

/// Hinge re-weight `E[1/lambda] = 1 / (c * sqrt(E[zeta^2]))`.
pub fn gamma_hinge(c: f64, second_moment: SecondMoment) -> f64 {
    debug_assert!(c > 0.0);
    1.0 / (c * second_moment.floored().sqrt())
}

/// Logistic re-weight: the Polya-Gamma mean at tilt `z = sqrt(E[omega^2])`.
///
/// Computed as `(c / (2 z)) * tanh(z / 2)`, which is the overflow-safe form
/// of `c/(2z) * (e^z - 1)/(1 + e^z)`; the `z -> 0` limit is `c / 4`.
pub fn gamma_logistic(c: f64, second_moment: SecondMoment) -> f64 {
    debug_assert!(c > 0.0);
    let z = second_moment.value().max(0.0).sqrt();
    if z < 1e-8 {
        c / 4.0
    } else {
        c / (2.0 * z) * (z / 2.0).tanh()
    }
}

/// SVR re-weights for the paired augmentations of `max(0, |delta| - eps)`:
/// `gamma = 1/(c sqrt(E[(delta-eps)^2]))`, `delta = 1/(c sqrt(E[(delta+eps)^2]))`.
pub fn gamma_delta_svr(c: f64, m_minus: SecondMoment, m_plus: SecondMoment) -> (f64, f64) {
    (gamma_hinge(c, m_minus), gamma_hinge(c, m_plus))
}

/// Per-example E-step output consumed by the M-step.
#[derive(Debug, Clone)]
pub struct Reweights {
    /// `gamma_n`: `E[1/lambda_n]` for hinge/SVR, `E[lambda_n]` for logistic.
    pub gamma: Vec<f64>,
    /// `delta_n = E[1/omega_n]`, present only for SVR.
    pub delta: Option<Vec<f64>>,
    /// Polya-Gamma tilt `z_n = sqrt(E[omega_n^2])`, present only for the
    /// adaptive logistic engine; needed to evaluate its variational bound.
    pub tilt: Option<Vec<f64>>,
}

impl Reweights {
    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hinge_unit_case() {
        // c=1, E[zeta^2]=1 -> 1.
        assert_eq!(gamma_hinge(1.0, SecondMoment::new(1.0)), 1.0);
    }

    #[test]
    fn hinge_inverse_identity_is_exact() {
        // gamma * c * sqrt(E[zeta^2]) = 1.
        for &(c, m) in &[(1.0, 4.0), (2.0, 1.0), (0.3, 123.4), (7.0, 1e-3)] {
            let g = gamma_hinge(c, SecondMoment::new(m));
            let back = g * c * m.sqrt();
            assert!((back - 1.0).abs() < 1e-12, "c={c} m={m} -> {back}");
        }
    }

    #[test]
    fn hinge_floor_prevents_division_by_zero() {
        let g = gamma_hinge(1.0, SecondMoment::new(0.0));
        assert!(g.is_finite());
        assert_eq!(g, 1.0 / MOMENT_FLOOR.sqrt());
    }

    #[test]
    fn logistic_zero_limit() {
        // c=1, z -> 0 gives 1/4; c=4 gives 1.
        assert_eq!(gamma_logistic(1.0, SecondMoment::new(0.0)), 0.25);
        assert_eq!(gamma_logistic(4.0, SecondMoment::new(0.0)), 1.0);
    }

    #[test]
    fn logistic_tanh_value() {
        // c=1, E=4 (z=2): (1/4) tanh(1).
        let g = gamma_logistic(1.0, SecondMoment::new(4.0));
        assert!((g - 0.25 * 1.0_f64.tanh()).abs() < 1e-15);
        assert!((g - 0.190399).abs() < 1e-6);
    }

    #[test]
    fn logistic_no_overflow_at_huge_tilt() {
        let g = gamma_logistic(1.0, SecondMoment::new(1e9));
        assert!(g.is_finite() && g > 0.0);
    }

    #[test]
    fn logistic_monotone_and_bounded() {
        let mut prev = f64::INFINITY;
        for i in 0..500 {
            let z = i as f64 * 0.1;
            let g = gamma_logistic(1.0, SecondMoment::new(z * z));
            assert!(g > 0.0 && g <= 0.25 + 1e-15);
            assert!(g <= prev + 1e-15, "not monotone at z={z}");
            prev = g;
        }
    }

    #[test]
    fn svr_symmetric_and_scaled() {
        let (g, d) = gamma_delta_svr(1.0, SecondMoment::new(1.0), SecondMoment::new(1.0));
        assert_eq!((g, d), (1.0, 1.0));
        let (g, d) = gamma_delta_svr(2.0, SecondMoment::new(4.0), SecondMoment::new(1.0));
        assert_eq!((g, d), (0.25, 0.5));
    }
}
