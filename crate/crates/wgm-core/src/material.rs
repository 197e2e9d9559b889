//! Host material (fused-silica defaults) and atom line data.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::constants::C;
use crate::error::{Error, Result};

/// Sellmeier coefficients for fused silica (wavelengths in microns).
pub const SELLMEIER_B: [f64; 3] = [0.6961663, 0.4079426, 0.8974794];
pub const SELLMEIER_LAMBDA_UM: [f64; 3] = [0.0684043, 0.1162414, 9.896161];

/// Wavelength band over which the Sellmeier fit is trusted (meters).
pub const DISPERSION_BAND: (f64, f64) = (400e-9, 2000e-9);

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Dispersion {
    /// Three-term Sellmeier fit for fused silica.
    Sellmeier,
    /// Wavelength-independent index, for dimensionless design studies.
    Fixed(f64),
}

/// Refractive index, bulk absorption, and surface-layer parameters of
/// the sphere material plus its water adlayer.
#[derive(Clone, Debug, PartialEq)]
pub struct MaterialModel {
    pub dispersion: Dispersion,
    /// (wavelength m, power absorption coefficient 1/m), sorted by
    /// wavelength; queries interpolate log-linearly between knots
    pub absorption: Vec<(f64, f64)>,
    /// Rayleigh scattering cross-section scale of surface roughness (m^2)
    pub sigma_b: f64,
    /// adsorbed water layer thickness (m)
    pub delta_w: f64,
    /// water absorption coefficient at the design band (1/m)
    pub beta_w: f64,
}

impl Default for MaterialModel {
    fn default() -> Self {
        MaterialModel {
            dispersion: Dispersion::Sellmeier,
            absorption: vec![(852e-9, 4.5e-4), (1550e-9, 1.5e-5)],
            sigma_b: 5e-18,
            delta_w: 0.2e-9,
            beta_w: 4.33,
        }
    }
}

impl MaterialModel {
    pub fn with_fixed_index(n: f64) -> Self {
        MaterialModel { dispersion: Dispersion::Fixed(n), ..Default::default() }
    }

    /// Refractive index at vacuum wavelength `lambda0` (meters).
    pub fn index(&self, lambda0: f64) -> Result<f64> {
        match self.dispersion {
            Dispersion::Fixed(n) => Ok(n),
            Dispersion::Sellmeier => {
                if !(DISPERSION_BAND.0..=DISPERSION_BAND.1).contains(&lambda0) {
                    return Err(Error::WavelengthOutOfBand(lambda0));
                }
                let w2 = (lambda0 * 1e6).powi(2);
                let mut s = 1.0;
                for i in 0..3 {
                    s += SELLMEIER_B[i] * w2 / (w2 - SELLMEIER_LAMBDA_UM[i].powi(2));
                }
                Ok(s.sqrt())
            }
        }
    }

    /// Bulk power absorption coefficient (1/m) at `lambda0`, log-linear
    /// in wavelength between table knots. Knot queries return the
    /// stored value exactly; queries outside the table hull error.
    pub fn absorption(&self, lambda0: f64) -> Result<f64> {
        let t = &self.absorption;
        if t.is_empty() {
            return Err(Error::AbsorptionOutOfHull(lambda0));
        }
        if let Some(&(_, a)) = t.iter().find(|&&(w, _)| w == lambda0) {
            return Ok(a);
        }
        if lambda0 < t[0].0 || lambda0 > t[t.len() - 1].0 {
            return Err(Error::AbsorptionOutOfHull(lambda0));
        }
        let i = t.partition_point(|&(w, _)| w < lambda0);
        let (w1, a1) = t[i - 1];
        let (w2, a2) = t[i];
        let u = (lambda0 - w1) / (w2 - w1);
        Ok((a1.ln() + u * (a2.ln() - a1.ln())).exp())
    }
}

/// Two-level emitter line: transition wavelength and transverse dipole
/// decay rate gamma_perp (rad/s).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtomSpec {
    pub name: String,
    pub lambda0: f64,
    pub gamma_perp: f64,
}

impl AtomSpec {
    /// Cesium D2 line, the design default.
    pub fn cesium_d2() -> Self {
        AtomSpec {
            name: "Cs D2".to_string(),
            lambda0: 852.359e-9,
            gamma_perp: 2.0 * PI * 2.61e6,
        }
    }

    /// Quality factor of the atomic dipole, pi c / (lambda0 gamma_perp).
    pub fn q_atom(&self) -> f64 {
        PI * C / (self.lambda0 * self.gamma_perp)
    }

    /// Reference volume 3 c lambda0^2 / (4 pi gamma_perp) relating mode
    /// volume to coupling strength.
    pub fn v0(&self) -> f64 {
        3.0 * C * self.lambda0 * self.lambda0 / (4.0 * PI * self.gamma_perp)
    }
}
