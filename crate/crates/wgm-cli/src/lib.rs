//! Command-line front end for the microsphere mode toolkit.
//!
//! Every command resolves its configuration the same way (built-in
//! defaults, then --config file, then explicit flags), echoes the
//! resolved configuration to stderr as TOML, and writes its payload to
//! stdout or --out. Exit codes: 0 success, 1 numerical failure during
//! a computation, 2 bad invocation.

// flag validation uses !(x > 0.0) so NaN fails closed, and the number
// formatting bands are written exactly as documented
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::manual_range_contains)]

mod figures;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wgm_core::config::{AtomSection, Config};
use wgm_core::cqed::{cqed_point, CqedPoint};
use wgm_core::material::AtomSpec;
use wgm_core::modes::{solve_resonance, Resonance};
use wgm_core::quality::{q_budget, QBudget};
use wgm_core::sweep::{optimum_report, run_sweep, OptPoint, SweepRow};
use wgm_core::volume::{mode_volume, ModeVolume};

use output::{human_num, key_values, Cell, Table};

#[derive(Parser)]
#[command(
    name = "wgm",
    version,
    about = "Design tool for whispering-gallery modes of dielectric microspheres",
    long_about = "Solves TM whispering-gallery resonances of a dielectric microsphere, their \
                  mode volumes and quality-factor budget, and the atom-coupling figures of \
                  merit (beta, g, n0, N0) used to pick optimal sphere sizes."
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one resonance and report every figure for it
    Mode {
        /// angular order (fundamental radial mode, l = m)
        #[arg(long, value_parser = clap::value_parser!(u32).range(5..=2000))]
        l: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate the design figures over a range of orders
    Sweep {
        #[command(flatten)]
        range: LRange,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep, then report the optima and the n0 = N0 crossing
    Optimize {
        #[command(flatten)]
        range: LRange,
        #[command(flatten)]
        common: Common,
    },
    /// Regenerate a named design curve as a data table
    Reproduce {
        /// curve id: fig2, fig3, fig5, fig7, fig8, fig9, fig10, fig11, fig12, fig14
        id: String,
        /// lowest order (figure-specific default)
        #[arg(long)]
        l_min: Option<u32>,
        /// highest order (figure-specific default)
        #[arg(long)]
        l_max: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct LRange {
    /// lowest order in the sweep
    #[arg(long, default_value_t = 20)]
    l_min: u32,
    /// highest order in the sweep
    #[arg(long, default_value_t = 120)]
    l_max: u32,
}

#[derive(Args)]
struct Common {
    /// TOML file with [material] and [atom] overrides
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// vacuum wavelength in meters, overriding the atom line
    #[arg(long, value_name = "METERS")]
    lambda: Option<f64>,
    /// wavelength-independent refractive index replacing dispersion
    #[arg(long = "n-fixed", visible_alias = "n", value_name = "INDEX")]
    n_fixed: Option<f64>,
    /// atom preset (available: cs-d2)
    #[arg(long, value_name = "NAME")]
    atom: Option<String>,
    /// fixed cavity Q used for N0 and kappa instead of the modeled budget
    #[arg(long = "q-fixed", value_name = "Q")]
    q_fixed: Option<f64>,
    /// payload format; defaults to human, except reproduce which defaults to csv
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// write the payload to this file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Human => "human",
            Format::Csv => "csv",
        }
    }
}

pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn usage<S: Into<String>>(msg: S) -> Failure {
    Failure { code: 2, message: msg.into() }
}

impl From<wgm_core::Error> for Failure {
    fn from(e: wgm_core::Error) -> Self {
        // preconditions are invocation problems; everything else is a
        // numerical failure inside the run
        let code = match e {
            wgm_core::Error::Config(_) | wgm_core::Error::SweepRange(_, _) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

struct Resolved {
    cfg: Config,
    q_fixed: Option<f64>,
    format: Format,
    out: Option<PathBuf>,
}

impl Resolved {
    fn q_note(&self) -> String {
        match self.q_fixed {
            Some(q) => format!("fixed {}", output::fmt_float(q)),
            None => "modeled".to_string(),
        }
    }
}

fn resolve(common: &Common, default_format: Format) -> Result<Resolved, Failure> {
    let mut cfg = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            Config::from_toml_str(&text)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        None => Config::default(),
    };
    if let Some(name) = &common.atom {
        match name.as_str() {
            "cs-d2" => cfg.atom = AtomSection::default(),
            other => {
                return Err(usage(format!("unknown atom preset '{other}' (available: cs-d2)")))
            }
        }
    }
    if let Some(lambda) = common.lambda {
        if !(lambda > 0.0) {
            return Err(usage("--lambda must be a positive wavelength in meters"));
        }
        cfg.atom.lambda0_m = lambda;
    }
    if let Some(n) = common.n_fixed {
        if !(n > 1.0) {
            return Err(usage("--n-fixed must exceed 1"));
        }
        cfg.material.fixed_n = Some(n);
    }
    if let Some(q) = common.q_fixed {
        if !(q > 0.0) {
            return Err(usage("--q-fixed must be positive"));
        }
    }
    Ok(Resolved {
        cfg,
        q_fixed: common.q_fixed,
        format: common.format.unwrap_or(default_format),
        out: common.out.clone(),
    })
}

/// Echo the resolved configuration and warnings to stderr, then write
/// the payload. Re-running with the echoed TOML as --config reproduces
/// the payload byte for byte.
fn emit(r: &Resolved, note: &str, payload: &str, warnings: &[String]) -> Result<(), Failure> {
    eprintln!("# resolved configuration");
    eprint!("{}", r.cfg.to_toml_string());
    eprintln!("# command: {note}");
    for w in warnings {
        eprintln!("warning: {w}");
    }
    match &r.out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{payload}"),
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Mode { l, common } => cmd_mode(l, &common),
        Cmd::Sweep { range, common } => cmd_sweep(&range, &common),
        Cmd::Optimize { range, common } => cmd_optimize(&range, &common),
        Cmd::Reproduce { id, l_min, l_max, common } => {
            cmd_reproduce(&id, (l_min, l_max), &common)
        }
    }
}

fn cmd_mode(l: u32, common: &Common) -> Result<(), Failure> {
    let r = resolve(common, Format::Human)?;
    let material = r.cfg.material();
    let at = r.cfg.atom();
    let res = solve_resonance(l, at.lambda0, &material)?;
    let vol = mode_volume(&res);
    let budget = q_budget(&res, &material)?;
    let q_cavity = r.q_fixed.unwrap_or(budget.q_total);
    let point = cqed_point(&res, &vol, q_cavity, &at)?;
    let payload = match r.format {
        Format::Human => mode_human(&at, &res, &vol, &budget, &point, r.q_fixed.is_some()),
        Format::Csv => mode_table(&res, &vol, &budget, &point).render(Format::Csv),
    };
    let note = format!("mode l = {l}, q = {}, format = {}", r.q_note(), r.format.name());
    emit(&r, &note, &payload, &[])
}

fn mode_human(
    at: &AtomSpec,
    res: &Resonance,
    vol: &ModeVolume,
    budget: &QBudget,
    point: &CqedPoint,
    q_is_fixed: bool,
) -> String {
    let mut lines: Vec<(&str, String)> = vec![
        ("mode", format!("TM p={} l={} m={}", res.mode.p, res.mode.l, res.mode.m)),
        ("atom", at.name.clone()),
        ("wavelength", format!("{:.6} nm", res.lambda0 * 1e9)),
        ("index", format!("{:.6}", res.n)),
        ("x_tilde", format!("{:.9}", res.x_tilde)),
        ("radius", format!("{:.6} um", res.radius * 1e6)),
        ("V_P", format!("{} um^3", human_num(vol.v_p * 1e18))),
        ("V_tilde", human_num(vol.v_tilde)),
        ("r_Q", format!("{:.3} um", vol.r_q * 1e6)),
        ("interior energy", format!("{:.2} %", vol.interior_fraction * 100.0)),
        (
            "exterior tail",
            if vol.diverged { "capped at the march limit".into() } else { "converged".into() },
        ),
        ("Q_rad", human_num(budget.q_rad)),
        ("Q_bulk", human_num(budget.q_bulk)),
        ("Q_surface", human_num(budget.q_ss)),
        ("Q_water", human_num(budget.q_w)),
        ("Q_total", human_num(budget.q_total)),
        ("dominant loss", budget.dominant.label().to_string()),
        (
            "Q_cavity",
            format!(
                "{} ({})",
                human_num(point.q_cavity),
                if q_is_fixed { "fixed" } else { "modeled" }
            ),
        ),
        ("Q_atom", human_num(point.q_atom)),
        ("beta", human_num(point.beta)),
        ("g/2pi", format!("{} MHz", human_num(point.g_over_2pi / 1e6))),
        (
            "kappa/2pi",
            format!("{} MHz", human_num(point.kappa / (2.0 * std::f64::consts::PI * 1e6))),
        ),
        ("n0", human_num(point.n0)),
        ("N0", human_num(point.n_crit)),
        ("sqrt(n0 N0)", human_num(point.geo_mean)),
    ];
    if budget.validity_warning {
        lines.push(("note", "Q_rad is order-of-magnitude only below l = 18".to_string()));
    }
    key_values(&lines)
}

fn mode_table(res: &Resonance, vol: &ModeVolume, budget: &QBudget, point: &CqedPoint) -> Table {
    Table {
        schema: "wgm-mode csv v1",
        columns: vec![
            "l",
            "a_m",
            "x_tilde",
            "n",
            "v_p_m3",
            "v_tilde",
            "r_q_m",
            "interior_fraction",
            "diverged",
            "q_rad",
            "q_bulk",
            "q_ss",
            "q_w",
            "q_total",
            "q_cavity",
            "q_atom",
            "beta",
            "g_over_2pi_hz",
            "kappa_rad_per_s",
            "n0",
            "n_crit",
            "geo_mean",
            "validity_warning",
        ],
        rows: vec![vec![
            Cell::Int(res.mode.l),
            Cell::Num(res.radius),
            Cell::Num(res.x_tilde),
            Cell::Num(res.n),
            Cell::Num(vol.v_p),
            Cell::Num(vol.v_tilde),
            Cell::Num(vol.r_q),
            Cell::Num(vol.interior_fraction),
            Cell::Text(vol.diverged.to_string()),
            Cell::Num(budget.q_rad),
            Cell::Num(budget.q_bulk),
            Cell::Num(budget.q_ss),
            Cell::Num(budget.q_w),
            Cell::Num(budget.q_total),
            Cell::Num(point.q_cavity),
            Cell::Num(point.q_atom),
            Cell::Num(point.beta),
            Cell::Num(point.g_over_2pi),
            Cell::Num(point.kappa),
            Cell::Num(point.n0),
            Cell::Num(point.n_crit),
            Cell::Num(point.geo_mean),
            Cell::Text(budget.validity_warning.to_string()),
        ]],
    }
}

fn cmd_sweep(range: &LRange, common: &Common) -> Result<(), Failure> {
    let r = resolve(common, Format::Human)?;
    let (rows, warnings) =
        run_sweep(&r.cfg.atom(), &r.cfg.material(), range.l_min, range.l_max, r.q_fixed)?;
    let table = match r.format {
        Format::Csv => sweep_csv_table(&rows),
        Format::Human => sweep_human_table(&rows),
    };
    let payload = table.render(r.format);
    let note = format!(
        "sweep l = {}..={}, q = {}, format = {}",
        range.l_min,
        range.l_max,
        r.q_note(),
        r.format.name()
    );
    emit(&r, &note, &payload, &warnings)
}

fn sweep_csv_table(rows: &[SweepRow]) -> Table {
    Table {
        schema: "wgm-sweep csv v1",
        columns: vec![
            "l",
            "a_m",
            "x_tilde",
            "v_p_m3",
            "v_tilde",
            "beta",
            "g_over_2pi_hz",
            "q_rad",
            "q_bulk",
            "q_ss",
            "q_w",
            "q_total",
            "q_cavity",
            "dominant",
            "n0",
            "n_crit",
            "geo_mean",
            "diverged",
            "validity_warning",
        ],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    Cell::Int(r.l),
                    Cell::Num(r.radius),
                    Cell::Num(r.x_tilde),
                    Cell::Num(r.v_p),
                    Cell::Num(r.v_tilde),
                    Cell::Num(r.beta),
                    Cell::Num(r.g_over_2pi),
                    Cell::Num(r.q_rad),
                    Cell::Num(r.q_bulk),
                    Cell::Num(r.q_ss),
                    Cell::Num(r.q_w),
                    Cell::Num(r.q_total),
                    Cell::Num(r.q_cavity),
                    Cell::Text(r.dominant.label().to_string()),
                    Cell::Num(r.n0),
                    Cell::Num(r.n_crit),
                    Cell::Num(r.geo_mean),
                    Cell::Text(r.diverged.to_string()),
                    Cell::Text(r.validity_warning.to_string()),
                ]
            })
            .collect(),
    }
}

fn sweep_human_table(rows: &[SweepRow]) -> Table {
    Table {
        schema: "wgm-sweep csv v1",
        columns: vec![
            "l", "a_um", "x_tilde", "v_p_um3", "g2pi_mhz", "q_total", "n0", "N0", "dominant",
            "notes",
        ],
        rows: rows
            .iter()
            .map(|r| {
                let mut notes = Vec::new();
                if r.diverged {
                    notes.push("tail capped");
                }
                if r.validity_warning {
                    notes.push("Q_rad approximate");
                }
                vec![
                    Cell::Int(r.l),
                    Cell::Num(r.radius * 1e6),
                    Cell::Num(r.x_tilde),
                    Cell::Num(r.v_p * 1e18),
                    Cell::Num(r.g_over_2pi / 1e6),
                    Cell::Num(r.q_total),
                    Cell::Num(r.n0),
                    Cell::Num(r.n_crit),
                    Cell::Text(r.dominant.label().to_string()),
                    if notes.is_empty() {
                        Cell::Empty
                    } else {
                        Cell::Text(notes.join(", "))
                    },
                ]
            })
            .collect(),
    }
}

fn cmd_optimize(range: &LRange, common: &Common) -> Result<(), Failure> {
    let r = resolve(common, Format::Human)?;
    let (rows, warnings) =
        run_sweep(&r.cfg.atom(), &r.cfg.material(), range.l_min, range.l_max, r.q_fixed)?;
    let report = optimum_report(&rows)?;
    let payload = match r.format {
        Format::Human => {
            let place = |p: &OptPoint| {
                let mut s = format!("@ l = {}, a = {:.6} um", p.l, p.radius * 1e6);
                if p.at_boundary {
                    s.push_str(" (at sweep boundary)");
                }
                s
            };
            let mut lines: Vec<(&str, String)> = vec![
                ("orders swept", format!("{}..={}", range.l_min, range.l_max)),
                ("cavity Q", r.q_note()),
                (
                    "max g/2pi",
                    format!(
                        "{} MHz {}",
                        human_num(report.max_g.value / 1e6),
                        place(&report.max_g)
                    ),
                ),
                ("min n0", format!("{} {}", human_num(report.min_n0.value), place(&report.min_n0))),
                (
                    "min N0",
                    format!("{} {}", human_num(report.min_n_crit.value), place(&report.min_n_crit)),
                ),
                (
                    "min sqrt(n0 N0)",
                    format!(
                        "{} {}",
                        human_num(report.min_geo_mean.value),
                        place(&report.min_geo_mean)
                    ),
                ),
            ];
            lines.push((
                "crossing",
                match report.crossing {
                    Some(c) => format!(
                        "n0 = N0 = {} @ a = {:.6} um",
                        human_num(c.value),
                        c.radius * 1e6
                    ),
                    None => "none within the swept range".to_string(),
                },
            ));
            key_values(&lines)
        }
        Format::Csv => {
            let opt_row = |kind: &str, p: &OptPoint| {
                vec![
                    Cell::Text(kind.to_string()),
                    Cell::Int(p.l),
                    Cell::Num(p.radius),
                    Cell::Num(p.value),
                    Cell::Text(p.at_boundary.to_string()),
                ]
            };
            let mut rows = vec![
                opt_row("max_g_over_2pi", &report.max_g),
                opt_row("min_n0", &report.min_n0),
                opt_row("min_n_crit", &report.min_n_crit),
                opt_row("min_geo_mean", &report.min_geo_mean),
            ];
            if let Some(c) = report.crossing {
                rows.push(vec![
                    Cell::Text("crossing".to_string()),
                    Cell::Empty,
                    Cell::Num(c.radius),
                    Cell::Num(c.value),
                    Cell::Empty,
                ]);
            }
            Table {
                schema: "wgm-optimize csv v1",
                columns: vec!["kind", "l", "a_m", "value", "at_boundary"],
                rows,
            }
            .render(Format::Csv)
        }
    };
    let note = format!(
        "optimize l = {}..={}, q = {}, format = {}",
        range.l_min,
        range.l_max,
        r.q_note(),
        r.format.name()
    );
    emit(&r, &note, &payload, &warnings)
}

fn cmd_reproduce(
    id: &str,
    range: (Option<u32>, Option<u32>),
    common: &Common,
) -> Result<(), Failure> {
    let r = resolve(common, Format::Csv)?;
    let fig = figures::reproduce(id, &r.cfg, range, r.q_fixed)?;
    let payload = fig.table.render(r.format);
    let note = match fig.range {
        Some((lo, hi)) => format!(
            "reproduce {id}, l = {lo}..={hi}, q = {}, format = {}",
            r.q_note(),
            r.format.name()
        ),
        None => format!("reproduce {id}, q = {}, format = {}", r.q_note(), r.format.name()),
    };
    emit(&r, &note, &payload, &fig.warnings)
}
