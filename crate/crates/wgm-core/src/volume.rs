//! Mode volume: the energy-density integral of the normalized mode,
//! V_P = integral of eps(r) |Psi(r)|^2 over all space, with the
//! envelope peak normalized to 1.
//!
//! The angular integrals are closed-form (see `specfun::angular`), so
//! only the radial direction is quadrature. The radial variable is the
//! interior phase x = k r, which makes the integrand's oscillation
//! period 2 pi everywhere inside; panels seeded per quarter-oscillation
//! keep the adaptive rule honest. Outside, the integral marches in
//! quarter-wavelength steps until a step adds less than `TAIL_TOL` of
//! the running total. Low-order leaky modes never level off; the march
//! then stops at the phase radius `X_QUANTIZATION` and the result is
//! flagged `diverged`.

use crate::constants::{QUAD_REL_TOL, TAIL_TOL, X_QUANTIZATION};
use crate::modes::Resonance;
use crate::quad::{adaptive, gauss7};
use crate::specfun::angular::angular_moments;
use crate::specfun::bessel;

#[derive(Clone, Copy, Debug)]
pub struct ModeVolume {
    /// physical mode volume (m^3)
    pub v_p: f64,
    /// dimensionless volume v_p k^3
    pub v_tilde: f64,
    /// size parameter of the resonance this volume belongs to
    pub x_tilde: f64,
    /// radius where the outward march stopped (m)
    pub r_q: f64,
    /// fraction of the integral accumulated inside the sphere
    pub interior_fraction: f64,
    /// true when the tail never converged and the march hit the cap
    pub diverged: bool,
}

pub fn mode_volume(res: &Resonance) -> ModeVolume {
    mode_volume_with_tail_tol(res, TAIL_TOL)
}

/// Same as `mode_volume` with an explicit tail cutoff, used to show the
/// result is insensitive to the cutoff choice.
pub fn mode_volume_with_tail_tol(res: &Resonance, tail_tol: f64) -> ModeVolume {
    let l = res.mode.l;
    let lf = l as f64;
    let lp1 = (l + 1) as f64;
    let n = res.n;
    let b = res.b_out;
    let moments = angular_moments(l);
    let (a_r, a_tan) = (moments.a_r, moments.a_theta + moments.a_phi);
    let eps = n * n;

    let mut f_in = |x: f64| {
        let (jm, jc, jp) = bessel::sph_j_triple(l, x);
        let f = jc / x + (lf * jm - lp1 * jp) / (2 * l + 1) as f64;
        eps * (a_r * (lp1 * jc / x).powi(2) + a_tan * f * f) * x * x
    };
    let mut f_out = |x: f64| {
        let y = x / n;
        let (hm, hc, hp) = bessel::sph_h1_triple(l, y).expect("exterior integrand in range");
        let hh = hc / y + (lf * hm - lp1 * hp) / (2 * l + 1) as f64;
        b * b * (a_r * (lp1 / y).powi(2) * hc.norm_sqr() + a_tan * hh.norm_sqr()) * x * x
    };

    // interior: quarter-oscillation panels, each refined adaptively
    let x_t = res.x_tilde;
    let panels = ((x_t / std::f64::consts::FRAC_PI_2).ceil() as usize).max(4);
    let dx = x_t / panels as f64;
    let mut interior = 0.0;
    for i in 0..panels {
        interior += adaptive(&mut f_in, i as f64 * dx, (i + 1) as f64 * dx, QUAD_REL_TOL);
    }

    // exterior: quarter-wavelength steps of the vacuum wave
    let step = std::f64::consts::FRAC_PI_2 * n;
    let mut total = interior;
    let mut edge = x_t;
    let diverged;
    loop {
        let next = (edge + step).min(X_QUANTIZATION);
        let s = gauss7(&mut f_out, edge, next);
        total += s;
        edge = next;
        if s < tail_tol * total {
            diverged = false;
            break;
        }
        if edge >= X_QUANTIZATION {
            diverged = true;
            break;
        }
    }

    let norm_sq = res.norm * res.norm;
    let v_tilde = norm_sq * total;
    let k3 = res.k.powi(3);
    ModeVolume {
        v_p: v_tilde / k3,
        v_tilde,
        x_tilde: x_t,
        r_q: edge / res.k,
        interior_fraction: interior / total,
        diverged,
    }
}
