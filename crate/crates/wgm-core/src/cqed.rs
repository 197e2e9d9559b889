//! Cavity-QED figures of merit for an atom coupled at the sphere
//! surface, on the equator, just outside the dielectric.
//!
//! beta is the mode volume measured in units of the atomic radiative
//! volume and rescaled by the surface field strength; every figure of
//! merit below is a function of beta and a quality factor:
//!   g = sqrt(2 pi c gamma_perp / (beta lambda0)),
//!   n0 = beta / (4 Q_atom)   (critical photon number),
//!   N0 = beta / Q_cavity     (critical atom number).

use std::f64::consts::PI;

use crate::constants::C;
use crate::error::{Error, Result};
use crate::material::AtomSpec;
use crate::modes::{exterior_surface_amplitude, Resonance};
use crate::volume::ModeVolume;

#[derive(Clone, Copy, Debug)]
pub struct CqedPoint {
    /// dimensionless saturation-scale volume 8 pi^2 V_P / (3 lambda0^3 |Psi(a)|^2)
    pub beta: f64,
    /// atom-field coupling rate g (rad/s)
    pub g: f64,
    /// g / 2 pi (Hz), the quantity usually quoted
    pub g_over_2pi: f64,
    /// critical (saturation) photon number
    pub n0: f64,
    /// critical atom number
    pub n_crit: f64,
    /// cavity field decay rate kappa (rad/s) implied by q_cavity
    pub kappa: f64,
    pub q_cavity: f64,
    pub q_atom: f64,
    /// sqrt(n0 * n_crit), the single-number strong-coupling figure
    pub geo_mean: f64,
}

/// beta from a mode volume and the surface amplitude of its mode.
pub fn beta(vol: &ModeVolume, surface_amplitude: f64, lambda0: f64) -> Result<f64> {
    if !(surface_amplitude > 0.0) {
        return Err(Error::ZeroSurfaceAmplitude);
    }
    Ok(8.0 * PI * PI * vol.v_p / (3.0 * lambda0.powi(3) * surface_amplitude * surface_amplitude))
}

/// Coupling rate from beta alone: g = sqrt(2 pi c gamma_perp / (beta lambda0)).
pub fn coupling_rate(beta: f64, atom: &AtomSpec) -> f64 {
    (2.0 * PI * C * atom.gamma_perp / (beta * atom.lambda0)).sqrt()
}

/// All figures of merit for a solved mode. `q_cavity` may be the
/// modeled budget total or a fixed measured value.
pub fn cqed_point(
    res: &Resonance,
    vol: &ModeVolume,
    q_cavity: f64,
    atom: &AtomSpec,
) -> Result<CqedPoint> {
    if !(q_cavity > 0.0) {
        return Err(Error::NonPositiveQ(q_cavity));
    }
    let surf = exterior_surface_amplitude(res);
    let beta = beta(vol, surf, atom.lambda0)?;
    let g = coupling_rate(beta, atom);

    // independent route: g = gamma_perp |Psi(a)| sqrt(V0 / V_P); the
    // two must agree to rounding, which pins the beta plumbing
    let g_alt = atom.gamma_perp * surf * (atom.v0() / vol.v_p).sqrt();
    let rel = (g - g_alt).abs() / g;
    assert!(rel < 1e-9, "coupling-rate routes disagree by {rel:e}");

    let q_atom = atom.q_atom();
    let n0 = beta / (4.0 * q_atom);
    let n_crit = beta / q_cavity;
    Ok(CqedPoint {
        beta,
        g,
        g_over_2pi: g / (2.0 * PI),
        n0,
        n_crit,
        kappa: PI * C / (atom.lambda0 * q_cavity),
        q_cavity,
        q_atom,
        geo_mean: (n0 * n_crit).sqrt(),
    })
}
