//! Design-space sweeps over mode order and the optimum reports built
//! from them.
//!
//! The sphere radius is not a free knob once the wavelength and order
//! are fixed: each l pins a = x_tilde(l) / k. A sweep therefore walks
//! l, and every "versus radius" view is parameterized by it.

use rayon::prelude::*;

use crate::cqed::{cqed_point, CqedPoint};
use crate::error::{Error, Result};
use crate::material::{AtomSpec, MaterialModel};
use crate::modes::{solve_resonance, Resonance};
use crate::quality::{q_budget, Mechanism};
use crate::volume::mode_volume;

#[derive(Clone, Copy, Debug)]
pub struct SweepRow {
    pub l: u32,
    /// sphere radius (m)
    pub radius: f64,
    pub x_tilde: f64,
    /// mode volume (m^3)
    pub v_p: f64,
    pub v_tilde: f64,
    pub beta: f64,
    /// coupling rate over 2 pi (Hz)
    pub g_over_2pi: f64,
    pub q_rad: f64,
    pub q_bulk: f64,
    pub q_ss: f64,
    pub q_w: f64,
    pub q_total: f64,
    /// cavity Q actually used for n_crit and kappa (fixed override or
    /// the budget total)
    pub q_cavity: f64,
    pub dominant: Mechanism,
    pub n0: f64,
    pub n_crit: f64,
    pub geo_mean: f64,
    pub diverged: bool,
    pub validity_warning: bool,
}

/// One fully evaluated design row: resonance, volume, budget, and
/// figures of merit for a single order.
pub fn design_row(
    l: u32,
    atom: &AtomSpec,
    material: &MaterialModel,
    q_fixed: Option<f64>,
) -> Result<SweepRow> {
    let res = solve_resonance(l, atom.lambda0, material)?;
    let vol = mode_volume(&res);
    let budget = q_budget(&res, material)?;
    let q_cavity = q_fixed.unwrap_or(budget.q_total);
    let point = cqed_point(&res, &vol, q_cavity, atom)?;
    Ok(SweepRow {
        l,
        radius: res.radius,
        x_tilde: res.x_tilde,
        v_p: vol.v_p,
        v_tilde: vol.v_tilde,
        beta: point.beta,
        g_over_2pi: point.g_over_2pi,
        q_rad: budget.q_rad,
        q_bulk: budget.q_bulk,
        q_ss: budget.q_ss,
        q_w: budget.q_w,
        q_total: budget.q_total,
        q_cavity,
        dominant: budget.dominant,
        n0: point.n0,
        n_crit: point.n_crit,
        geo_mean: point.geo_mean,
        diverged: vol.diverged,
        validity_warning: budget.validity_warning,
    })
}

/// Sweep orders l_min..=l_max. Orders whose row cannot be computed
/// (for example, no radiative confinement at very low l) are reported
/// as warnings instead of rows. Rows come back sorted by l.
pub fn run_sweep(
    atom: &AtomSpec,
    material: &MaterialModel,
    l_min: u32,
    l_max: u32,
    q_fixed: Option<f64>,
) -> Result<(Vec<SweepRow>, Vec<String>)> {
    if !(5 <= l_min && l_min < l_max && l_max <= 200) {
        return Err(Error::SweepRange(l_min, l_max));
    }
    let results: Vec<(u32, Result<SweepRow>)> = (l_min..=l_max)
        .into_par_iter()
        .map(|l| (l, design_row(l, atom, material, q_fixed)))
        .collect();
    let mut rows = Vec::new();
    let mut warnings = Vec::new();
    for (l, r) in results {
        match r {
            Ok(row) => rows.push(row),
            Err(e) => warnings.push(format!("l = {l}: {e}")),
        }
    }
    if rows.is_empty() {
        return Err(Error::EmptySweep);
    }
    Ok((rows, warnings))
}

#[derive(Clone, Copy, Debug)]
pub struct OptPoint {
    pub l: u32,
    pub radius: f64,
    pub value: f64,
    /// true when the best row is the first or last of the sweep, i.e.
    /// the optimum was not bracketed
    pub at_boundary: bool,
}

/// Radius where the n0 and n_crit curves cross, interpolated
/// log-linearly between the bracketing rows.
#[derive(Clone, Copy, Debug)]
pub struct Crossing {
    pub radius: f64,
    pub value: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct OptimumReport {
    pub min_n0: OptPoint,
    pub min_n_crit: OptPoint,
    pub min_geo_mean: OptPoint,
    pub max_g: OptPoint,
    pub crossing: Option<Crossing>,
}

fn arg_best<F: Fn(&SweepRow) -> f64>(rows: &[SweepRow], f: F, minimize: bool) -> OptPoint {
    let mut best = 0usize;
    for (i, row) in rows.iter().enumerate() {
        let better = if minimize {
            f(row) < f(&rows[best])
        } else {
            f(row) > f(&rows[best])
        };
        if better {
            best = i;
        }
    }
    OptPoint {
        l: rows[best].l,
        radius: rows[best].radius,
        value: f(&rows[best]),
        at_boundary: best == 0 || best == rows.len() - 1,
    }
}

pub fn find_crossing(rows: &[SweepRow]) -> Option<Crossing> {
    for w in rows.windows(2) {
        let (r1, r2) = (&w[0], &w[1]);
        let d1 = r1.n0.ln() - r1.n_crit.ln();
        let d2 = r2.n0.ln() - r2.n_crit.ln();
        if d1 == 0.0 {
            return Some(Crossing { radius: r1.radius, value: r1.n0 });
        }
        if d1 * d2 < 0.0 {
            let t = d1 / (d1 - d2);
            let radius = (r1.radius.ln() + t * (r2.radius.ln() - r1.radius.ln())).exp();
            let value = (r1.n0.ln() + t * (r2.n0.ln() - r1.n0.ln())).exp();
            return Some(Crossing { radius, value });
        }
    }
    None
}

pub fn optimum_report(rows: &[SweepRow]) -> Result<OptimumReport> {
    if rows.is_empty() {
        return Err(Error::EmptySweep);
    }
    Ok(OptimumReport {
        min_n0: arg_best(rows, |r| r.n0, true),
        min_n_crit: arg_best(rows, |r| r.n_crit, true),
        min_geo_mean: arg_best(rows, |r| r.geo_mean, true),
        max_g: arg_best(rows, |r| r.g_over_2pi, false),
        crossing: find_crossing(rows),
    })
}

#[derive(Clone, Copy, Debug)]
pub enum ScenarioTarget {
    /// find the order whose resonance radius is nearest this (m)
    Radius(f64),
    Order(u32),
}

#[derive(Clone, Copy, Debug)]
pub enum QSource {
    /// use the four-mechanism budget total
    Modeled,
    /// use a fixed (for example, measured) cavity Q
    Fixed(f64),
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub target: ScenarioTarget,
    pub q: QSource,
}

#[derive(Clone, Debug)]
pub struct ScenarioResult {
    pub name: String,
    pub l: u32,
    pub radius: f64,
    pub x_tilde: f64,
    pub v_p: f64,
    pub q_cavity: f64,
    pub point: CqedPoint,
}

/// Order whose fundamental resonance radius is nearest `radius` at the
/// given wavelength.
pub fn nearest_order(radius: f64, lambda0: f64, material: &MaterialModel) -> Result<u32> {
    if !(radius > 0.0) {
        return Err(Error::RadiusTooSmall(radius));
    }
    let n = material.index(lambda0)?;
    let x_target = 2.0 * std::f64::consts::PI * n * radius / lambda0;
    // first-order inversion of x_tilde(l) ~ nu + |t_1| (nu/2)^{1/3}
    let guess = x_target - 2.338 * (0.5 * x_target).cbrt();
    let mut lo = (guess as i64 - 3).max(5) as u32;
    let mut hi = (guess as i64 + 3).max(8) as u32;
    let radius_of = |l: u32| -> Result<f64> {
        Ok(solve_resonance(l, lambda0, material)?.radius)
    };
    for _ in 0..64 {
        let mut best_l = lo;
        let mut best_d = f64::INFINITY;
        for l in lo..=hi {
            let d = (radius_of(l)? - radius).abs();
            if d < best_d {
                best_d = d;
                best_l = l;
            }
        }
        let interior = (best_l > lo || lo == 5) && best_l < hi;
        if interior {
            return Ok(best_l);
        }
        if best_l <= lo {
            lo = lo.saturating_sub(3).max(5);
        }
        if best_l >= hi {
            hi += 3;
        }
    }
    Err(Error::RadiusTooSmall(radius))
}

pub fn evaluate_scenario(
    scenario: &Scenario,
    atom: &AtomSpec,
    material: &MaterialModel,
) -> Result<ScenarioResult> {
    let l = match scenario.target {
        ScenarioTarget::Order(l) => l,
        ScenarioTarget::Radius(a) => nearest_order(a, atom.lambda0, material)?,
    };
    let res: Resonance = solve_resonance(l, atom.lambda0, material)?;
    let vol = mode_volume(&res);
    let q_cavity = match scenario.q {
        QSource::Fixed(q) => q,
        QSource::Modeled => q_budget(&res, material)?.q_total,
    };
    let point = cqed_point(&res, &vol, q_cavity, atom)?;
    Ok(ScenarioResult {
        name: scenario.name.clone(),
        l,
        radius: res.radius,
        x_tilde: res.x_tilde,
        v_p: vol.v_p,
        q_cavity,
        point,
    })
}

/// The three observed-sphere design studies usually quoted alongside
/// the sweep optima: two small spheres at a measured Q of 8e6 and a
/// large sphere at a measured Q of 5e7.
pub fn default_scenarios() -> Vec<Scenario> {
    vec![
        Scenario {
            name: "10 um sphere, measured Q".into(),
            target: ScenarioTarget::Radius(10e-6),
            q: QSource::Fixed(0.8e7),
        },
        Scenario {
            name: "optimal sphere, measured Q".into(),
            target: ScenarioTarget::Radius(7.83e-6),
            q: QSource::Fixed(0.8e7),
        },
        Scenario {
            name: "60 um sphere, measured Q".into(),
            target: ScenarioTarget::Radius(60e-6),
            q: QSource::Fixed(5e7),
        },
    ]
}

/// Published reference points for comparison tables. These are quoted
/// constants, not computed by this crate.
#[derive(Clone, Copy, Debug)]
pub struct LiteraturePoint {
    pub name: &'static str,
    pub g_over_2pi: f64,
    pub n0: f64,
    pub n_crit: f64,
}

pub const FP_CURRENT: LiteraturePoint = LiteraturePoint {
    name: "Fabry-Perot, current",
    g_over_2pi: 110e6,
    n0: 2.82e-4,
    n_crit: 6.13e-3,
};

pub const FP_PROJECTED: LiteraturePoint = LiteraturePoint {
    name: "Fabry-Perot, projected",
    g_over_2pi: 770e6,
    n0: 5.7e-6,
    n_crit: 1.9e-4,
};

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn defaults() -> (AtomSpec, MaterialModel) {
        (AtomSpec::cesium_d2(), MaterialModel::default())
    }

    #[test]
    fn range_preconditions() {
        let (atom, m) = defaults();
        assert!(matches!(
            run_sweep(&atom, &m, 4, 50, None),
            Err(Error::SweepRange(4, 50))
        ));
        assert!(matches!(
            run_sweep(&atom, &m, 50, 50, None),
            Err(Error::SweepRange(50, 50))
        ));
        assert!(matches!(
            run_sweep(&atom, &m, 50, 201, None),
            Err(Error::SweepRange(50, 201))
        ));
    }

    #[test]
    fn low_orders_become_warnings_not_rows() {
        let (atom, m) = defaults();
        let (rows, warnings) = run_sweep(&atom, &m, 5, 12, None).unwrap();
        // silica at this line confines l >= 8 only
        assert_eq!(rows.first().unwrap().l, 8);
        assert_eq!(warnings.len(), 3);
        assert!(warnings[0].starts_with("l = 5:"));
    }

    #[test]
    fn rows_are_ordered_and_radius_increases() {
        let (atom, m) = defaults();
        let (rows, _) = run_sweep(&atom, &m, 20, 40, None).unwrap();
        assert_eq!(rows.len(), 21);
        for w in rows.windows(2) {
            assert!(w[1].l == w[0].l + 1);
            assert!(w[1].radius > w[0].radius);
            assert!(w[1].x_tilde > w[0].x_tilde);
        }
    }

    #[test]
    fn fixed_q_overrides_only_the_cavity_column() {
        let (atom, m) = defaults();
        let (rows_m, _) = run_sweep(&atom, &m, 30, 35, None).unwrap();
        let (rows_f, _) = run_sweep(&atom, &m, 30, 35, Some(1e7)).unwrap();
        for (a, b) in rows_m.iter().zip(rows_f.iter()) {
            assert_eq!(a.q_total, b.q_total);
            assert_eq!(b.q_cavity, 1e7);
            assert_eq!(a.n0, b.n0);
            assert_relative_eq!(b.n_crit, b.beta / 1e7, max_relative = 1e-15);
        }
    }

    #[test]
    fn nearest_order_recovers_the_design_points() {
        let (atom, m) = defaults();
        assert_eq!(nearest_order(10e-6, atom.lambda0, &m).unwrap(), 99);
        assert_eq!(nearest_order(7.83e-6, atom.lambda0, &m).unwrap(), 76);
    }

    #[test]
    fn crossing_sits_between_its_brackets() {
        let (atom, m) = defaults();
        let (rows, _) = run_sweep(&atom, &m, 60, 80, None).unwrap();
        let c = find_crossing(&rows).expect("crossing in range");
        assert!(c.radius > rows[0].radius && c.radius < rows.last().unwrap().radius);
        assert_relative_eq!(c.radius, 7.0243e-6, max_relative = 1e-3);
        assert_relative_eq!(c.value, 2.5593e-5, max_relative = 1e-3);
    }

    #[test]
    fn boundary_optima_are_flagged() {
        let (atom, m) = defaults();
        let (rows, _) = run_sweep(&atom, &m, 40, 60, None).unwrap();
        // n_crit keeps falling past l = 60, so its minimum must sit on
        // the upper boundary and be flagged
        let report = optimum_report(&rows).unwrap();
        assert!(report.min_n_crit.at_boundary);
        assert_eq!(report.min_n_crit.l, 60);
    }
}
