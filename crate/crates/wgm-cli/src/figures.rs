//! Named design curves. Each id regenerates one standard view of the
//! design space with a sensible default order range; --l-min/--l-max
//! override it and the resolved config supplies material and atom.

use wgm_core::config::Config;
use wgm_core::cqed::beta;
use wgm_core::material::MaterialModel;
use wgm_core::modes::{exterior_surface_amplitude, solve_resonance};
use wgm_core::sweep::{default_scenarios, evaluate_scenario, run_sweep, FP_CURRENT, FP_PROJECTED};
use wgm_core::volume::mode_volume;
use wgm_core::Error;

use crate::output::{Cell, Table};
use crate::{usage, Failure};

pub const IDS: &[&str] = &[
    "fig2", "fig3", "fig5", "fig7", "fig8", "fig9", "fig10", "fig11", "fig12", "fig14",
];

/// Index used for the dimensionless curves when nothing overrides it.
const DEFAULT_FIXED_INDEX: f64 = 1.45246;

pub struct Figure {
    pub table: Table,
    pub warnings: Vec<String>,
    /// order range actually used, None for table-style figures
    pub range: Option<(u32, u32)>,
}

fn pick(range: (Option<u32>, Option<u32>), lo: u32, hi: u32) -> (u32, u32) {
    (range.0.unwrap_or(lo), range.1.unwrap_or(hi))
}

fn check_range(lo: u32, hi: u32) -> Result<(), Failure> {
    if !(5 <= lo && lo < hi && hi <= 200) {
        return Err(Error::SweepRange(lo, hi).into());
    }
    Ok(())
}

/// Dimensionless per-order quantities at a fixed index: solves and
/// integrates directly so the rows do not depend on the loss model.
fn dimensionless_rows(
    cfg: &Config,
    lo: u32,
    hi: u32,
    with_beta: bool,
) -> Result<(Vec<Vec<Cell>>, Vec<String>), Failure> {
    let n = cfg.material.fixed_n.unwrap_or(DEFAULT_FIXED_INDEX);
    let material = MaterialModel::with_fixed_index(n);
    let at = cfg.atom();
    let mut rows = Vec::new();
    let mut warnings = Vec::new();
    for l in lo..=hi {
        match solve_resonance(l, at.lambda0, &material) {
            Ok(res) => {
                let vol = mode_volume(&res);
                let mut row = vec![Cell::Int(l), Cell::Num(res.x_tilde)];
                if with_beta {
                    let psi = exterior_surface_amplitude(&res);
                    let b = beta(&vol, psi, at.lambda0).map_err(Failure::from)?;
                    row.push(Cell::Num(b));
                    row.push(Cell::Num(1.0 / b.sqrt()));
                } else {
                    row.push(Cell::Num(vol.v_tilde));
                }
                rows.push(row);
            }
            Err(e) => warnings.push(format!("l = {l}: {e}")),
        }
    }
    Ok((rows, warnings))
}

pub fn reproduce(
    id: &str,
    cfg: &Config,
    range: (Option<u32>, Option<u32>),
    q_fixed: Option<f64>,
) -> Result<Figure, Failure> {
    let sweep = |lo: u32, hi: u32| run_sweep(&cfg.atom(), &cfg.material(), lo, hi, q_fixed);
    match id {
        "fig2" => {
            let (lo, hi) = pick(range, 5, 50);
            check_range(lo, hi)?;
            let (rows, warnings) = dimensionless_rows(cfg, lo, hi, false)?;
            Ok(Figure {
                table: Table {
                    schema: "wgm-fig2 csv v1",
                    columns: vec!["l", "x_tilde", "v_tilde"],
                    rows,
                },
                warnings,
                range: Some((lo, hi)),
            })
        }
        "fig3" => {
            let (lo, hi) = pick(range, 20, 60);
            let (rows, warnings) = sweep(lo, hi)?;
            Ok(Figure {
                table: Table {
                    schema: "wgm-fig3 csv v1",
                    columns: vec!["l", "a_m", "v_p_m3"],
                    rows: rows
                        .iter()
                        .map(|r| vec![Cell::Int(r.l), Cell::Num(r.radius), Cell::Num(r.v_p)])
                        .collect(),
                },
                warnings,
                range: Some((lo, hi)),
            })
        }
        "fig5" => {
            let (lo, hi) = pick(range, 20, 120);
            let (rows, warnings) = sweep(lo, hi)?;
            Ok(Figure {
                table: Table {
                    schema: "wgm-fig5 csv v1",
                    columns: vec!["l", "a_m", "q_rad"],
                    rows: rows
                        .iter()
                        .map(|r| vec![Cell::Int(r.l), Cell::Num(r.radius), Cell::Num(r.q_rad)])
                        .collect(),
                },
                warnings,
                range: Some((lo, hi)),
            })
        }
        "fig7" => {
            let (lo, hi) = pick(range, 20, 120);
            let (rows, warnings) = sweep(lo, hi)?;
            Ok(Figure {
                table: Table {
                    schema: "wgm-fig7 csv v1",
                    columns: vec![
                        "l", "a_m", "q_rad", "q_bulk", "q_ss", "q_w", "q_total", "dominant",
                    ],
                    rows: rows
                        .iter()
                        .map(|r| {
                            vec![
                                Cell::Int(r.l),
                                Cell::Num(r.radius),
                                Cell::Num(r.q_rad),
                                Cell::Num(r.q_bulk),
                                Cell::Num(r.q_ss),
                                Cell::Num(r.q_w),
                                Cell::Num(r.q_total),
                                Cell::Text(r.dominant.label().to_string()),
                            ]
                        })
                        .collect(),
                },
                warnings,
                range: Some((lo, hi)),
            })
        }
        "fig8" => {
            let (lo, hi) = pick(range, 5, 50);
            check_range(lo, hi)?;
            let (rows, warnings) = dimensionless_rows(cfg, lo, hi, true)?;
            Ok(Figure {
                table: Table {
                    schema: "wgm-fig8 csv v1",
                    columns: vec!["l", "x_tilde", "beta", "inv_sqrt_beta"],
                    rows,
                },
                warnings,
                range: Some((lo, hi)),
            })
        }
        "fig9" => {
            let (lo, hi) = pick(range, 15, 90);
            let (rows, warnings) = sweep(lo, hi)?;
            Ok(Figure {
                table: Table {
                    schema: "wgm-fig9 csv v1",
                    columns: vec!["l", "a_m", "g_over_2pi_hz"],
                    rows: rows
                        .iter()
                        .map(|r| vec![Cell::Int(r.l), Cell::Num(r.radius), Cell::Num(r.g_over_2pi)])
                        .collect(),
                },
                warnings,
                range: Some((lo, hi)),
            })
        }
        "fig10" => {
            let (lo, hi) = pick(range, 15, 90);
            let (rows, warnings) = sweep(lo, hi)?;
            Ok(Figure {
                table: Table {
                    schema: "wgm-fig10 csv v1",
                    columns: vec!["l", "a_m", "n0"],
                    rows: rows
                        .iter()
                        .map(|r| vec![Cell::Int(r.l), Cell::Num(r.radius), Cell::Num(r.n0)])
                        .collect(),
                },
                warnings,
                range: Some((lo, hi)),
            })
        }
        "fig11" => {
            let (lo, hi) = pick(range, 20, 120);
            let (rows, warnings) = sweep(lo, hi)?;
            Ok(Figure {
                table: Table {
                    schema: "wgm-fig11 csv v1",
                    columns: vec!["l", "a_m", "n_crit"],
                    rows: rows
                        .iter()
                        .map(|r| vec![Cell::Int(r.l), Cell::Num(r.radius), Cell::Num(r.n_crit)])
                        .collect(),
                },
                warnings,
                range: Some((lo, hi)),
            })
        }
        "fig12" => {
            let (lo, hi) = pick(range, 20, 120);
            let (rows, warnings) = sweep(lo, hi)?;
            Ok(Figure {
                table: Table {
                    schema: "wgm-fig12 csv v1",
                    columns: vec!["a_um", "n0", "N0", "geomean"],
                    rows: rows
                        .iter()
                        .map(|r| {
                            vec![
                                Cell::Num(r.radius * 1e6),
                                Cell::Num(r.n0),
                                Cell::Num(r.n_crit),
                                Cell::Num(r.geo_mean),
                            ]
                        })
                        .collect(),
                },
                warnings,
                range: Some((lo, hi)),
            })
        }
        "fig14" => {
            let at = cfg.atom();
            let material = cfg.material();
            let mut rows = Vec::new();
            for s in default_scenarios() {
                let r = evaluate_scenario(&s, &at, &material).map_err(Failure::from)?;
                rows.push(vec![
                    Cell::Text(r.name.clone()),
                    Cell::Text("computed".into()),
                    Cell::Int(r.l),
                    Cell::Num(r.radius),
                    Cell::Num(r.q_cavity),
                    Cell::Num(r.point.g_over_2pi),
                    Cell::Num(r.point.n0),
                    Cell::Num(r.point.n_crit),
                ]);
            }
            for lp in [FP_CURRENT, FP_PROJECTED] {
                rows.push(vec![
                    Cell::Text(lp.name.to_string()),
                    Cell::Text("literature".into()),
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Num(lp.g_over_2pi),
                    Cell::Num(lp.n0),
                    Cell::Num(lp.n_crit),
                ]);
            }
            Ok(Figure {
                table: Table {
                    schema: "wgm-fig14 csv v1",
                    columns: vec![
                        "name",
                        "source",
                        "l",
                        "a_m",
                        "q_cavity",
                        "g_over_2pi_hz",
                        "n0",
                        "n_crit",
                    ],
                    rows,
                },
                warnings: Vec::new(),
                range: None,
            })
        }
        other => Err(usage(format!(
            "unknown curve id '{other}' (available: {})",
            IDS.join(", ")
        ))),
    }
}
