//! Solid-angle integrals of the fundamental (l = m) mode profile.
//!
//! The polar profiles of the three field components are powers of
//! sin(theta), so each integral reduces to a Beta function. Evaluating
//! through log-Gamma keeps them finite at any order, even though the
//! individual Gamma factors overflow far below l = 200.

use std::f64::consts::PI;

use libm::lgamma;

/// Solid-angle weights of the radial, polar, and azimuthal component
/// profiles at order l.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngularMoments {
    pub l: u32,
    /// integral of sin^{2l}(theta) over the sphere
    pub a_r: f64,
    /// integral of cos^2(theta) sin^{2l-2}(theta) over the sphere
    pub a_theta: f64,
    /// integral of sin^{2l-2}(theta) over the sphere
    pub a_phi: f64,
}

/// Closed forms: with s = sqrt(pi),
/// a_r = 2 pi s Gamma(l+1)/Gamma(l+3/2),
/// a_theta = pi s Gamma(l)/Gamma(l+3/2),
/// a_phi = 2 pi s Gamma(l)/Gamma(l+1/2).
pub fn angular_moments(l: u32) -> AngularMoments {
    assert!(l >= 1, "angular moments need l >= 1");
    let lf = l as f64;
    let ln_spi = 0.5 * PI.ln();
    let a_r = 2.0 * PI * (ln_spi + lgamma(lf + 1.0) - lgamma(lf + 1.5)).exp();
    let a_theta = PI * (ln_spi + lgamma(lf) - lgamma(lf + 1.5)).exp();
    let a_phi = 2.0 * PI * (ln_spi + lgamma(lf) - lgamma(lf + 0.5)).exp();
    AngularMoments { l, a_r, a_theta, a_phi }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::adaptive;
    use approx::assert_relative_eq;

    fn quadrature_moments(l: u32) -> (f64, f64, f64) {
        // direct numerical integration of the defining integrals,
        // 2 pi * int_0^pi profile(theta) sin(theta) dtheta
        let li = l as i32;
        let tau = 2.0 * PI;
        let a_r = tau * adaptive(&mut |t: f64| t.sin().powi(2 * li + 1), 0.0, PI, 1e-12);
        let a_theta = tau
            * adaptive(
                &mut |t: f64| t.cos().powi(2) * t.sin().powi(2 * li - 1),
                0.0,
                PI,
                1e-12,
            );
        let a_phi = tau * adaptive(&mut |t: f64| t.sin().powi(2 * li - 1), 0.0, PI, 1e-12);
        (a_r, a_theta, a_phi)
    }

    #[test]
    fn closed_form_matches_quadrature() {
        for &l in &[1u32, 2, 5, 20, 76, 120] {
            let m = angular_moments(l);
            let (qr, qt, qp) = quadrature_moments(l);
            assert_relative_eq!(m.a_r, qr, max_relative = 1e-10);
            assert_relative_eq!(m.a_theta, qt, max_relative = 1e-10);
            assert_relative_eq!(m.a_phi, qp, max_relative = 1e-10);
        }
    }

    #[test]
    fn reference_values_at_l_76() {
        // independent 40-digit evaluation of the Beta forms
        let m = angular_moments(76);
        assert_relative_eq!(m.a_r, 1.27120168736955, max_relative = 1e-13);
        assert_relative_eq!(m.a_theta, 0.008363168995852302, max_relative = 1e-13);
        assert_relative_eq!(m.a_phi, 1.2795648563654023, max_relative = 1e-13);
    }

    #[test]
    fn no_overflow_at_l_200() {
        let m = angular_moments(200);
        assert!(m.a_r.is_finite() && m.a_r > 0.0);
        assert!(m.a_theta.is_finite() && m.a_theta > 0.0);
        assert!(m.a_phi.is_finite() && m.a_phi > 0.0);
    }

    #[test]
    fn first_order_closed_forms() {
        // l = 1: a_r = 8 pi/3, a_theta = 4 pi/3, a_phi = 4 pi
        let m = angular_moments(1);
        assert_relative_eq!(m.a_r, 8.0 * PI / 3.0, max_relative = 1e-13);
        assert_relative_eq!(m.a_theta, 4.0 * PI / 3.0, max_relative = 1e-13);
        assert_relative_eq!(m.a_phi, 4.0 * PI, max_relative = 1e-13);
    }
}
