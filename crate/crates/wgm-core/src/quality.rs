//! Quality-factor budget: radiation leakage, bulk absorption, surface
//! roughness scattering, and the adsorbed water layer.
//!
//! Q_rad comes from the eikonal tunneling form: with nu = l + 1/2 and
//! eta the tunneling angle,
//!   Q_rad = (nu/2) n^(1-2b) sqrt(n^2 - 1) exp(2 T),
//!   T = nu (eta - tanh eta),
//!   eta = arccosh( n / (1 - (|t_p| xi + c_l) / nu) ),
//! where xi = (nu/2)^(1/3) scales the p-th Airy zero t_p and
//! c_l = 1 / (l sqrt(l^2 - 1)) is the curvature correction of the
//! effective barrier. b selects polarization (0 TE, 1 TM) in the
//! prefactor, so Q_rad(TE)/Q_rad(TM) = n^2 exactly at fixed l. The
//! correction c_l is kept polarization-independent: this is the TM form
//! of the barrier, reused for TE, where the residual error it causes is
//! far below the order-of-magnitude fidelity of the eikonal formula
//! itself.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::material::MaterialModel;
use crate::modes::{Polarization, Resonance};
use crate::specfun::airy::airy_zero;

/// Loss mechanisms, in the fixed precedence order used to break ties
/// when reporting the dominant one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mechanism {
    Radiative,
    Bulk,
    SurfaceScatter,
    Water,
}

impl Mechanism {
    pub fn label(self) -> &'static str {
        match self {
            Mechanism::Radiative => "radiative",
            Mechanism::Bulk => "bulk",
            Mechanism::SurfaceScatter => "surface_scatter",
            Mechanism::Water => "water",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct QBudget {
    pub q_rad: f64,
    pub q_bulk: f64,
    pub q_ss: f64,
    pub q_w: f64,
    /// material-limited composite (everything except radiation)
    pub q_mat: f64,
    pub q_total: f64,
    pub dominant: Mechanism,
    /// the eikonal Q_rad is order-of-magnitude only below l = 18
    pub validity_warning: bool,
}

/// Harmonic combination 1 / sum(1/q).
pub fn combine(qs: &[f64]) -> f64 {
    1.0 / qs.iter().map(|q| 1.0 / q).sum::<f64>()
}

/// Radiative (whispering-gallery leakage) quality factor for the p-th
/// radial mode of polar order l at relative index n.
pub fn q_rad(l: u32, p: u32, n: f64, pol: Polarization) -> Result<f64> {
    if l < 5 {
        return Err(Error::OrderTooSmall(l));
    }
    let t_p = airy_zero(p)?;
    let lf = l as f64;
    let nu = lf + 0.5;
    let xi = (0.5 * nu).cbrt();
    let c_l = 1.0 / (lf * (lf * lf - 1.0).sqrt());
    let inner = 1.0 - (t_p * xi + c_l) / nu;
    let arg = n / inner;
    if !(arg > 1.0) {
        return Err(Error::NoConfinement { l, arg });
    }
    let eta = arg.acosh();
    let t = nu * (eta - eta.tanh());
    let b = match pol {
        Polarization::Te => 0,
        Polarization::Tm => 1,
    };
    Ok(0.5 * nu * n.powi(1 - 2 * b) * (n * n - 1.0).sqrt() * (2.0 * t).exp())
}

/// Bulk absorption limit 2 pi n / (alpha lambda0).
pub fn q_bulk(lambda0: f64, material: &MaterialModel) -> Result<f64> {
    let n = material.index(lambda0)?;
    let alpha = material.absorption(lambda0)?;
    Ok(2.0 * PI * n / (alpha * lambda0))
}

/// Surface-roughness Rayleigh scattering limit,
/// 3 eps (eps+2)^2 / ((4 pi)^3 (eps-1)^{5/2}) lambda^{7/2} sqrt(2a) / sigma_B^2.
pub fn q_surface_scatter(radius: f64, lambda0: f64, material: &MaterialModel) -> Result<f64> {
    let n = material.index(lambda0)?;
    let eps = n * n;
    let pref = 3.0 * eps * (eps + 2.0).powi(2) / ((4.0 * PI).powi(3) * (eps - 1.0).powf(2.5));
    Ok(pref * lambda0.powf(3.5) * (2.0 * radius).sqrt() / material.sigma_b.powi(2))
}

/// Adsorbed water layer limit,
/// sqrt(pi / (8 n^3)) sqrt(2a) / (delta_w sqrt(lambda) beta_w).
pub fn q_water(radius: f64, lambda0: f64, material: &MaterialModel) -> Result<f64> {
    let n = material.index(lambda0)?;
    Ok((PI / (8.0 * n.powi(3))).sqrt() * (2.0 * radius).sqrt()
        / (material.delta_w * lambda0.sqrt() * material.beta_w))
}

/// Full four-mechanism budget for a solved resonance.
pub fn q_budget(res: &Resonance, material: &MaterialModel) -> Result<QBudget> {
    let l = res.mode.l;
    let rad = q_rad(l, res.mode.p, res.n, res.mode.pol)?;
    let bulk = q_bulk(res.lambda0, material)?;
    let ss = q_surface_scatter(res.radius, res.lambda0, material)?;
    let w = q_water(res.radius, res.lambda0, material)?;
    let q_mat = combine(&[bulk, ss, w]);
    let q_total = combine(&[rad, bulk, ss, w]);
    let mechanisms = [
        (Mechanism::Radiative, rad),
        (Mechanism::Bulk, bulk),
        (Mechanism::SurfaceScatter, ss),
        (Mechanism::Water, w),
    ];
    let mut dominant = Mechanism::Radiative;
    let mut q_min = f64::INFINITY;
    for &(m, q) in &mechanisms {
        if q < q_min {
            q_min = q;
            dominant = m;
        }
    }
    Ok(QBudget {
        q_rad: rad,
        q_bulk: bulk,
        q_ss: ss,
        q_w: w,
        q_mat,
        q_total,
        dominant,
        validity_warning: l < 18,
    })
}
