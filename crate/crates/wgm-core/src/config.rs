//! TOML-backed run configuration: material and atom overrides.
//!
//! Every field has a default matching the fused-silica / cesium D2
//! design study, so an empty file (or no file) reproduces the built-in
//! behavior bit for bit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::material::{AtomSpec, Dispersion, MaterialModel};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    pub material: MaterialSection,
    pub atom: AtomSection,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct MaterialSection {
    /// fixed refractive index; absent means the silica Sellmeier fit
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_n: Option<f64>,
    /// absorption table knots, wavelength in meters
    pub absorption_lambda_m: Vec<f64>,
    /// absorption at each knot, 1/m
    pub absorption_alpha_per_m: Vec<f64>,
    pub sigma_b_m2: f64,
    pub delta_w_m: f64,
    pub beta_w_per_m: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AtomSection {
    pub name: String,
    pub lambda0_m: f64,
    /// gamma_perp / 2 pi, in Hz
    pub gamma_perp_over_2pi_hz: f64,
}

impl Default for MaterialSection {
    fn default() -> Self {
        let m = MaterialModel::default();
        MaterialSection {
            fixed_n: None,
            absorption_lambda_m: m.absorption.iter().map(|&(w, _)| w).collect(),
            absorption_alpha_per_m: m.absorption.iter().map(|&(_, a)| a).collect(),
            sigma_b_m2: m.sigma_b,
            delta_w_m: m.delta_w,
            beta_w_per_m: m.beta_w,
        }
    }
}

impl Default for AtomSection {
    fn default() -> Self {
        let a = AtomSpec::cesium_d2();
        AtomSection {
            name: a.name,
            lambda0_m: a.lambda0,
            gamma_perp_over_2pi_hz: 2.61e6,
        }
    }
}

impl Config {
    pub fn from_toml_str(s: &str) -> Result<Config> {
        let cfg: Config = toml::from_str(s).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }

    fn validate(&self) -> Result<()> {
        let m = &self.material;
        if m.absorption_lambda_m.len() != m.absorption_alpha_per_m.len() {
            return Err(Error::Config(
                "absorption_lambda_m and absorption_alpha_per_m must have equal length".into(),
            ));
        }
        if !m.absorption_lambda_m.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Config(
                "absorption_lambda_m must be strictly increasing".into(),
            ));
        }
        if m.absorption_alpha_per_m.iter().any(|&a| a <= 0.0) {
            return Err(Error::Config("absorption coefficients must be positive".into()));
        }
        if let Some(n) = m.fixed_n {
            if !(n > 1.0) {
                return Err(Error::Config("fixed_n must exceed 1".into()));
            }
        }
        if self.atom.lambda0_m <= 0.0 || self.atom.gamma_perp_over_2pi_hz <= 0.0 {
            return Err(Error::Config("atom line constants must be positive".into()));
        }
        Ok(())
    }

    pub fn material(&self) -> MaterialModel {
        let m = &self.material;
        MaterialModel {
            dispersion: match m.fixed_n {
                Some(n) => Dispersion::Fixed(n),
                None => Dispersion::Sellmeier,
            },
            absorption: m
                .absorption_lambda_m
                .iter()
                .cloned()
                .zip(m.absorption_alpha_per_m.iter().cloned())
                .collect(),
            sigma_b: m.sigma_b_m2,
            delta_w: m.delta_w_m,
            beta_w: m.beta_w_per_m,
        }
    }

    pub fn atom(&self) -> AtomSpec {
        AtomSpec {
            name: self.atom.name.clone(),
            lambda0: self.atom.lambda0_m,
            gamma_perp: 2.0 * std::f64::consts::PI * self.atom.gamma_perp_over_2pi_hz,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip_bit_exact() {
        let cfg = Config::default();
        let text = cfg.to_toml_string();
        let back = Config::from_toml_str(&text).unwrap();
        assert_eq!(cfg, back);
        assert_eq!(cfg.material(), back.material());
        assert_eq!(cfg.atom(), back.atom());
    }

    #[test]
    fn empty_file_equals_defaults() {
        let cfg = Config::from_toml_str("").unwrap();
        assert_eq!(cfg, Config::default());
        assert_eq!(cfg.material(), MaterialModel::default());
        let atom = cfg.atom();
        let reference = AtomSpec::cesium_d2();
        assert_eq!(atom.name, reference.name);
        assert_eq!(atom.lambda0, reference.lambda0);
        assert_eq!(atom.gamma_perp, reference.gamma_perp);
    }

    #[test]
    fn fixed_index_override() {
        let cfg = Config::from_toml_str("[material]\nfixed_n = 2.0\n").unwrap();
        assert_eq!(cfg.material().dispersion, Dispersion::Fixed(2.0));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        assert!(Config::from_toml_str("[material]\nrefractive = 2.0\n").is_err());
    }

    #[test]
    fn mismatched_absorption_table_is_rejected() {
        let text = "[material]\nabsorption_lambda_m = [852e-9]\nabsorption_alpha_per_m = [1e-4, 2e-4]\n";
        assert!(Config::from_toml_str(text).is_err());
    }

    #[test]
    fn atom_override() {
        let cfg = Config::from_toml_str(
            "[atom]\nname = \"Rb D2\"\nlambda0_m = 780.241e-9\ngamma_perp_over_2pi_hz = 3.03e6\n",
        )
        .unwrap();
        let atom = cfg.atom();
        assert_eq!(atom.name, "Rb D2");
        assert_eq!(atom.lambda0, 780.241e-9);
        assert_eq!(atom.gamma_perp, 2.0 * std::f64::consts::PI * 3.03e6);
    }
}
