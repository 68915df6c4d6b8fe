//! Command-line front end. Every subcommand resolves a [`RunConfig`] from an
//! optional TOML file plus flag overrides, then writes tables whose headers
//! record the tool version, the resolved configuration and the seed.
//!
//! Exit codes: 0 success, 2 configuration or usage error, 3 domain or
//! invariant violation, 4 quadrature non-convergence.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::check::run_all;
use crate::coherence::recoherence_window;
use crate::config::{default_jobs, FileConfig, OutputFormat, RunConfig, StateKind};
use crate::error::{Error, Result};
use crate::estimates::{
    bandwidth_estimate, cavity_cross_check, cavity_estimate, single_mode_estimate, BandwidthSpec, CavityEstimateInput,
};
use crate::figures::{fig2_curves, fig2_minimum, fig3, Fig2Spec};
use crate::oracle::{
    compare_squeezed, fringe_contrast, random_tuples, relative_spread, FringeExperiment, OracleRecord, GENERATOR,
};
use crate::photon_state::PhotonState;
use crate::special::bessel_j0;
use crate::sweep::{point_row, replay, sweep, GridSpec, SweepAxis, POINT_COLUMNS};
use crate::table::{Cell, Table};

pub const TOOL: &str = "recoherence-lab";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Speed of light, used only for SI reporting.
const C_SI: f64 = 299_792_458.0;

/// Largest tolerated relative spread of quadrature/closed-form ratios.
pub const ORACLE_SPREAD_TOL: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = TOOL, version, about = "Electron-interference decoherence and recoherence in an excited photon mode")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the coherence functional at one parameter point.
    #[command(allow_negative_numbers = true)]
    Compute {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Evaluate a one- or two-axis parameter grid.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        point: PointArgs,
        /// Axis as `name=lin|log:start:stop:count`; repeat for a second axis.
        #[arg(long = "grid", value_name = "AXIS")]
        grids: Vec<String>,
    },
    /// g against emission time for several r, and g_min(r).
    #[command(allow_negative_numbers = true)]
    Fig2 {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long = "r", num_args = 1.., value_name = "R")]
        r_values: Vec<f64>,
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long = "omega-bar-T")]
        omega_bar_t: Option<f64>,
        /// Samples per period of g (π in ω̄t₀).
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(long, default_value_t = 2)]
        periods: usize,
        /// r grid of the g_min table.
        #[arg(long = "gmin-grid", default_value = "lin:0.05:3:60")]
        gmin_grid: String,
    },
    /// Window-averaged g and window width against r.
    Fig3 {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long = "r-grid", default_value = "log:0.05:6:60")]
        r_grid: String,
    },
    /// Cross-check the closed forms against quadrature and Monte Carlo.
    #[command(allow_negative_numbers = true)]
    Oracle {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long = "V-over-lambda3")]
        v_over_lambda3: Option<f64>,
        #[arg(long)]
        tuples: Option<usize>,
        #[arg(long = "rel-tol")]
        rel_tol: Option<f64>,
        #[arg(long = "max-panels")]
        max_panels: Option<usize>,
        #[arg(long = "n-samples")]
        n_samples: Option<usize>,
        #[arg(long = "sigma-sq")]
        sigma_sq: Option<f64>,
        /// Classical phase amplitude for the sinusoidal fringe run.
        #[arg(long)]
        amplitude: Option<f64>,
    },
    /// Order-of-magnitude recoherence estimates.
    #[command(allow_negative_numbers = true)]
    Estimate {
        #[arg(long = "R-over-T", default_value_t = 0.1)]
        r_over_t: f64,
        #[arg(long = "lambda3-over-V", default_value_t = 1.0)]
        lambda3_over_v: f64,
        #[arg(long = "lambda-over-T", default_value_t = 0.1)]
        lambda_over_t: f64,
        #[arg(long = "dw-over-w", default_value_t = 0.1)]
        dw_over_w: f64,
        #[arg(long = "solid-angle", default_value_t = 0.1)]
        solid_angle: f64,
        /// `text` or `json`.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run the invariant suite.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `text` or `json`.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Re-ingest a point table and recompute every row.
    Replay {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// `csv` or `json` (JSON lines).
    #[arg(long)]
    pub format: Option<String>,
    /// Flight half-time in seconds, for SI reporting.
    #[arg(long = "T-seconds")]
    pub t_seconds: Option<f64>,
}

#[derive(Debug, Args, Default)]
pub struct PointArgs {
    /// vacuum | squeezed | thermal | classical
    #[arg(long)]
    pub state: Option<String>,
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long)]
    pub nbar: Option<f64>,
    #[arg(long)]
    pub amplitude: Option<f64>,
    #[arg(long)]
    pub phase: Option<f64>,
    #[arg(long = "omega-bar-T")]
    pub omega_bar_t: Option<f64>,
    #[arg(long = "R-over-T")]
    pub r_over_t: Option<f64>,
    #[arg(long = "t0-over-T")]
    pub t0_over_t: Option<f64>,
    #[arg(long = "V-over-lambda3")]
    pub v_over_lambda3: Option<f64>,
}

fn set<T>(slot: &mut T, v: Option<T>) {
    if let Some(v) = v {
        *slot = v;
    }
}

fn resolve(common: &CommonArgs) -> Result<RunConfig> {
    let mut cfg = match &common.config {
        Some(path) => RunConfig::from_file(&FileConfig::load(path)?)?,
        None => RunConfig { jobs: default_jobs(), ..RunConfig::default() },
    };
    set(&mut cfg.seed, common.seed);
    if let Some(j) = common.jobs {
        if j == 0 {
            return Err(Error::Argument("--jobs must be ≥ 1".into()));
        }
        cfg.jobs = j;
    }
    if let Some(out) = &common.out {
        cfg.output.dir = Some(out.clone());
    }
    if let Some(f) = &common.format {
        cfg.output.format = OutputFormat::parse(f)?;
    }
    if common.t_seconds.is_some() {
        cfg.t_seconds = common.t_seconds;
    }
    Ok(cfg)
}

impl PointArgs {
    fn apply(&self, cfg: &mut RunConfig) -> Result<()> {
        let p = &mut cfg.point;
        set(&mut p.omega_bar_t, self.omega_bar_t);
        set(&mut p.r_over_t, self.r_over_t);
        set(&mut p.t0_over_t, self.t0_over_t);
        set(&mut p.v_over_lambda3, self.v_over_lambda3);
        let st = &mut p.state;
        match &self.state {
            Some(kind) => st.kind = StateKind::parse(kind)?,
            // A state-specific flag alone selects its state.
            None if self.nbar.is_some() => st.kind = StateKind::Thermal,
            None if self.amplitude.is_some() => st.kind = StateKind::Classical,
            None => {}
        }
        set(&mut st.r, self.r);
        set(&mut st.theta, self.theta);
        set(&mut st.nbar, self.nbar);
        set(&mut st.amplitude, self.amplitude);
        set(&mut st.phase, self.phase);
        Ok(())
    }
}

fn header(table: Table, command: &str, cfg: &RunConfig) -> Table {
    table
        .with_metadata("tool", json!(TOOL))
        .with_metadata("version", json!(VERSION))
        .with_metadata("command", json!(command))
        .with_metadata("seed", json!(cfg.seed))
        .with_metadata("config", cfg.to_json())
}

fn out_dir(cfg: &RunConfig) -> PathBuf {
    cfg.output.dir.clone().unwrap_or_else(|| PathBuf::from("out"))
}

/// Create the directory and every target file up front so an unwritable
/// destination fails before any computation.
fn prepare_outputs(dir: &Path, names: &[String]) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::Io(format!("cannot create {}: {e}", dir.display())))?;
    names
        .iter()
        .map(|n| {
            let p = dir.join(n);
            fs::File::create(&p).map_err(|e| Error::Io(format!("cannot write {}: {e}", p.display())))?;
            Ok(p)
        })
        .collect()
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn warn_relativistic(cfg: &RunConfig) -> Result<()> {
    let v = cfg.point.path()?.validity();
    if v.relativistic_warning {
        eprintln!("warning: peak electron speed {:.4} c; non-relativistic treatment is marginal", v.peak_speed);
    }
    Ok(())
}

/// SI values for reporting, when `T` is given in seconds.
fn si_block(cfg: &RunConfig) -> Option<Value> {
    let t = cfg.t_seconds?;
    let p = &cfg.point;
    let omega = p.omega_bar_t / t;
    let lambda = 2.0 * std::f64::consts::PI * C_SI / omega;
    Some(json!({
        "T_s": t,
        "R_m": p.r_over_t * C_SI * t,
        "t0_s": p.t0_over_t * t,
        "omega_bar_rad_per_s": omega,
        "wavelength_m": lambda,
        "V_m3": p.v_over_lambda3 * lambda.powi(3),
    }))
}

fn compute(cfg: &RunConfig, write_file: bool) -> Result<String> {
    cfg.validate()?;
    let path = if write_file {
        let fmt = cfg.output.format;
        Some(prepare_outputs(&out_dir(cfg), &[format!("compute.{}", fmt.extension())])?.remove(0))
    } else {
        None
    };
    warn_relativistic(cfg)?;
    let mut table = header(Table::new(&POINT_COLUMNS), "compute", cfg);
    if let Some(si) = si_block(cfg) {
        table = table.with_metadata("si", si);
    }
    if let Ok(PhotonState::Squeezed(sq)) = cfg.point.state.build() {
        if let Some(w) = recoherence_window(&sq, &cfg.point.path()?, &cfg.point.mode()?) {
            table = table.with_metadata("recoherence_window", serde_json::to_value(w).expect("json"));
        }
    }
    table.push(point_row(&cfg.point)?);
    let text = table.render(cfg.output.format);
    if let Some(p) = path {
        write(&p, &text)?;
    }
    Ok(text)
}

fn run_sweep(cfg: &mut RunConfig, grids: &[String]) -> Result<()> {
    if !grids.is_empty() {
        cfg.sweep = grids.iter().map(|g| SweepAxis::parse(g)).collect::<Result<_>>()?;
    }
    if cfg.sweep.is_empty() {
        return Err(Error::Argument("sweep needs --grid or a [sweep] section".into()));
    }
    cfg.validate()?;
    let fmt = cfg.output.format;
    let paths = prepare_outputs(&out_dir(cfg), &[format!("sweep.{}", fmt.extension())])?;
    warn_relativistic(cfg)?;
    let table = header(sweep(&cfg.point, &cfg.sweep, cfg.jobs)?, "sweep", cfg);
    write(&paths[0], &table.render(fmt))
}

fn run_fig2(cfg: &RunConfig, spec: &Fig2Spec, gmin: &GridSpec) -> Result<()> {
    let fmt = cfg.output.format;
    let ext = fmt.extension();
    let paths = prepare_outputs(&out_dir(cfg), &[format!("fig2_curves.{ext}"), format!("fig2_gmin.{ext}")])?;
    let meta = json!({
        "r": spec.r_values,
        "theta": spec.theta,
        "omega_bar_T": spec.omega_bar_t,
        "points_per_period": spec.points_per_period,
        "periods": spec.periods,
    });
    let curves = header(fig2_curves(spec)?, "fig2", cfg).with_metadata("fig2", meta.clone());
    let minimum = header(fig2_minimum(&gmin.values()), "fig2", cfg).with_metadata("fig2", meta);
    write(&paths[0], &curves.render(fmt))?;
    write(&paths[1], &minimum.render(fmt))
}

fn run_fig3(cfg: &RunConfig, grid: &GridSpec) -> Result<()> {
    let fmt = cfg.output.format;
    let paths = prepare_outputs(&out_dir(cfg), &[format!("fig3.{}", fmt.extension())])?;
    let table = header(fig3(&grid.values())?, "fig3", cfg);
    write(&paths[0], &table.render(fmt))
}

const ORACLE_COLUMNS: [&str; 14] = [
    "r",
    "theta",
    "t0_over_T",
    "omega_bar_T",
    "R_over_T",
    "V_over_lambda3",
    "numeric_WR",
    "closed_WR",
    "ratio",
    "numeric_W0_mode",
    "g",
    "WR_over_W0",
    "panels",
    "seed",
];

fn oracle_row(r: &OracleRecord) -> Vec<Cell> {
    [
        r.r,
        r.theta,
        r.t0_over_t,
        r.omega_bar_t,
        r.r_over_t,
        r.v_over_lambda3,
        r.numeric_wr,
        r.closed_wr,
        r.ratio,
        r.numeric_w0_mode,
        r.closed_g,
        r.vacuum_ratio,
        r.panels as f64,
        r.seed as f64,
    ]
    .into_iter()
    .map(Cell::Num)
    .collect()
}

fn run_oracle(cfg: &RunConfig) -> Result<()> {
    cfg.validate()?;
    let fmt = cfg.output.format;
    let ext = fmt.extension();
    let paths = prepare_outputs(&out_dir(cfg), &[format!("oracle.{ext}"), format!("fringe.{ext}")])?;

    let tuples = random_tuples(cfg.oracle.tuples, cfg.point.v_over_lambda3, cfg.seed)?;
    let mut table = Table::new(&ORACLE_COLUMNS);
    let mut ratios = Vec::with_capacity(tuples.len());
    let mut worst_2g = 0.0_f64;
    for t in &tuples {
        let rec = compare_squeezed(&t.state, &t.path, &t.mode, &cfg.oracle.quadrature, cfg.seed)?;
        ratios.push(rec.ratio);
        worst_2g = worst_2g.max(((rec.vacuum_ratio - 2.0 * rec.closed_g) / (2.0 * rec.closed_g)).abs());
        table.push(oracle_row(&rec));
    }
    let spread = if ratios.is_empty() { 0.0 } else { relative_spread(&ratios) };
    let summary = json!({ "ratio_spread": spread, "max_2g_deviation": worst_2g, "tolerance": ORACLE_SPREAD_TOL });
    let table = header(table, "oracle", cfg).with_metadata("summary", summary);

    let f = &cfg.fringe;
    let gauss = FringeExperiment {
        n_screen_bins: f.n_screen_bins,
        ..FringeExperiment::gaussian(f.sigma_sq, f.mean_phase, f.n_samples, cfg.seed)
    };
    let sine = FringeExperiment { n_screen_bins: f.n_screen_bins, ..FringeExperiment::sinusoidal(f.amplitude, f.n_samples, cfg.seed) };
    let mut fringe = Table::new(&["model", "parameter", "contrast", "stat_error", "binned_contrast", "expected", "n_samples"]);
    for (model, param, exp, expected) in [
        ("gaussian", f.sigma_sq, &gauss, (-0.5 * f.sigma_sq).exp()),
        ("sinusoidal", f.amplitude, &sine, bessel_j0(f.amplitude).abs()),
    ] {
        let o = fringe_contrast(exp)?;
        fringe.push(vec![
            Cell::Text(model.into()),
            Cell::Num(param),
            Cell::Num(o.contrast),
            Cell::Num(o.stat_error),
            Cell::Num(o.binned_contrast),
            Cell::Num(expected),
            Cell::Num(f.n_samples as f64),
        ]);
    }
    let fringe = header(fringe, "oracle", cfg).with_metadata("generator", json!(GENERATOR));

    write(&paths[0], &table.render(fmt))?;
    write(&paths[1], &fringe.render(fmt))?;
    eprintln!("ratio spread {spread:e}, max |WR/W0 − 2g|/|2g| {worst_2g:e}");
    if spread > ORACLE_SPREAD_TOL || worst_2g > ORACLE_SPREAD_TOL {
        return Err(Error::Domain(format!("oracle disagreement: spread {spread:e}, 2g deviation {worst_2g:e}")));
    }
    Ok(())
}

fn run_estimate(
    r_over_t: f64,
    lambda3_over_v: f64,
    lambda_over_t: f64,
    dw_over_w: f64,
    solid_angle: f64,
    format: &str,
) -> Result<String> {
    let single = single_mode_estimate(&CavityEstimateInput { lambda3_over_v, r_over_t, lambda_over_t });
    let cavity = cavity_estimate(r_over_t)?;
    let band = bandwidth_estimate(r_over_t, &BandwidthSpec { delta_omega_over_omega: dw_over_w, delta_solid_angle: solid_angle });
    let cross = cavity_cross_check(r_over_t)?;
    let mut warnings = single.warnings.clone();
    warnings.extend(band.warnings.iter().cloned());
    match format {
        "json" => Ok(serde_json::to_string(&json!({
            "tool": TOOL,
            "version": VERSION,
            "inputs": {
                "R_over_T": r_over_t, "lambda3_over_V": lambda3_over_v, "lambda_over_T": lambda_over_t,
                "dw_over_w": dw_over_w, "solid_angle": solid_angle,
            },
            "single_mode": single.value,
            "cavity": cavity,
            "bandwidth": band.value,
            "cross_check": cross,
            "warnings": warnings,
        }))
        .expect("json")
            + "\n"),
        "text" => {
            let mut s = format!(
                "single_mode  {:.6e}\ncavity       {:.6e}\nbandwidth    {:.6e}\nexact_cavity {:.6e} (ω̄T = {:.4}, estimate/exact = {:.4})\n",
                single.value, cavity, band.value, cross.exact, cross.best_omega_bar_t, cross.ratio
            );
            for w in &warnings {
                s.push_str(&format!("warning: {w}\n"));
            }
            Ok(s)
        }
        other => Err(Error::Argument(format!("unknown estimate format `{other}` (text|json)"))),
    }
}

fn run_check(seed: u64, format: &str) -> Result<bool> {
    if format != "text" && format != "json" {
        return Err(Error::Argument(format!("unknown check format `{format}` (text|json)")));
    }
    let outcomes = run_all(seed)?;
    for o in &outcomes {
        if format == "json" {
            println!("{}", serde_json::to_string(o).expect("json"));
        } else {
            let mark = if o.passed { "PASS" } else { "FAIL" };
            println!("{mark} [{}] {} {}", o.module, o.name, o.detail);
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    eprintln!("{} checks, {failed} failed", outcomes.len());
    Ok(failed == 0)
}

fn run_replay(input: &Path, out: Option<&Path>) -> Result<bool> {
    let table = Table::read(input)?;
    let again = replay(&table)?;
    let same = again.rows == table.rows;
    if let Some(dir) = out {
        let ext = input.extension().and_then(|e| e.to_str()).unwrap_or("csv");
        let fmt = if ext == "jsonl" || ext == "json" { OutputFormat::Json } else { OutputFormat::Csv };
        let paths = prepare_outputs(dir, &[format!("replay.{}", fmt.extension())])?;
        write(&paths[0], &again.render(fmt))?;
    }
    eprintln!("{} rows, {}", table.rows.len(), if same { "identical" } else { "DIFFERENT" });
    Ok(same)
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compute { common, point } => {
            let mut cfg = resolve(&common)?;
            point.apply(&mut cfg)?;
            let text = compute(&cfg, common.out.is_some())?;
            print!("{text}");
        }
        Command::Sweep { common, point, grids } => {
            let mut cfg = resolve(&common)?;
            point.apply(&mut cfg)?;
            run_sweep(&mut cfg, &grids)?;
        }
        Command::Fig2 { common, r_values, theta, omega_bar_t, points, periods, gmin_grid } => {
            let cfg = resolve(&common)?;
            let defaults = Fig2Spec::default();
            let spec = Fig2Spec {
                r_values: if r_values.is_empty() { defaults.r_values } else { r_values },
                theta: theta.unwrap_or(defaults.theta),
                omega_bar_t: omega_bar_t.unwrap_or(defaults.omega_bar_t),
                points_per_period: points,
                periods,
            };
            run_fig2(&cfg, &spec, &GridSpec::parse(&gmin_grid)?)?;
        }
        Command::Fig3 { common, r_grid } => {
            let cfg = resolve(&common)?;
            run_fig3(&cfg, &GridSpec::parse(&r_grid)?)?;
        }
        Command::Oracle { common, v_over_lambda3, tuples, rel_tol, max_panels, n_samples, sigma_sq, amplitude } => {
            let mut cfg = resolve(&common)?;
            set(&mut cfg.point.v_over_lambda3, v_over_lambda3);
            set(&mut cfg.oracle.tuples, tuples);
            set(&mut cfg.oracle.quadrature.rel_tol, rel_tol);
            set(&mut cfg.oracle.quadrature.max_panels, max_panels);
            set(&mut cfg.fringe.n_samples, n_samples);
            set(&mut cfg.fringe.sigma_sq, sigma_sq);
            set(&mut cfg.fringe.amplitude, amplitude);
            run_oracle(&cfg)?;
        }
        Command::Estimate { r_over_t, lambda3_over_v, lambda_over_t, dw_over_w, solid_angle, format } => {
            print!("{}", run_estimate(r_over_t, lambda3_over_v, lambda_over_t, dw_over_w, solid_angle, &format)?);
        }
        Command::Check { seed, format } => {
            if !run_check(seed, &format)? {
                return Ok(3);
            }
        }
        Command::Replay { input, out } => {
            if !run_replay(&input, out.as_deref())? {
                return Ok(3);
            }
        }
    }
    Ok(0)
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_defaults() {
        let cli = Cli::try_parse_from(["x", "compute", "--r", "2", "--omega-bar-T", "4", "--nbar", "1.5"]).unwrap();
        let Command::Compute { common, point } = cli.command else { panic!() };
        let mut cfg = resolve(&common).unwrap();
        point.apply(&mut cfg).unwrap();
        assert_eq!(cfg.point.omega_bar_t, 4.0);
        assert_eq!(cfg.point.state.kind, StateKind::Thermal);
        assert_eq!(cfg.point.state.nbar, 1.5);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["x", "compute", "--r", "-1"]), 3);
        assert_eq!(run(["x", "compute", "--R-over-T", "2"]), 3);
        assert_eq!(run(["x", "compute", "--state", "squeezy"]), 2);
        assert_eq!(run(["x", "frobnicate"]), 2);
        assert_eq!(run(["x", "estimate", "--format", "yaml"]), 2);
    }

    #[test]
    fn estimate_text_uses_scientific_notation() {
        let s = run_estimate(0.1, 1.0, 0.1, 0.1, 0.1, "text").unwrap();
        assert!(s.contains("cavity       1.000000e-7"));
    }
}
