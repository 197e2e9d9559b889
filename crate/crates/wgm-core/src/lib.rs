//! Microsphere whispering-gallery-mode design toolkit.
//!
//! Computes TM resonances of a dielectric sphere in the fundamental
//! radial and polar mode family (p = 1, l = m), their normalized mode
//! functions and volumes, a four-mechanism quality-factor budget, and
//! the cavity-QED figures of merit (beta, g, n0, N0) used to pick
//! optimal sphere sizes for strong coupling.

// validation uses !(x > 0.0) so NaN fails closed, and tolerance bounds
// are written as explicit comparisons matching their documentation
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::manual_range_contains)]

pub mod config;
pub mod constants;
pub mod cqed;
pub mod error;
pub mod material;
pub mod modes;
pub mod quad;
pub mod quality;
pub mod specfun;
pub mod sweep;
pub mod volume;

pub use config::Config;
pub use cqed::CqedPoint;
pub use error::{Error, Result};
pub use material::{AtomSpec, Dispersion, MaterialModel};
pub use modes::{FieldSample, ModeIndex, Polarization, Resonance};
pub use quality::{Mechanism, QBudget};
pub use sweep::{
    design_row, Crossing, LiteraturePoint, OptPoint, OptimumReport, QSource, Scenario,
    ScenarioResult, ScenarioTarget, SweepRow,
};
pub use volume::ModeVolume;
