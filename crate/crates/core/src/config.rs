//! Run configuration: a TOML file with nested sections, overridden by flags.
//!
//! ```toml
//! seed = 7
//! jobs = 4
//!
//! [path]
//! R_over_T = 0.05
//! t0_over_T = 0.0
//!
//! [mode]
//! omega_bar_T = 3.0
//! V_over_lambda3 = 1.0
//!
//! [state]
//! kind = "squeezed"   # vacuum | squeezed | thermal | classical
//! r = 1.0
//! theta = 0.0
//!
//! [[sweep.axes]]
//! param = "t0_over_T"
//! start = 0.0
//! stop = 1.5
//! count = 31
//! spacing = "linear"
//!
//! [output]
//! dir = "out"
//! format = "csv"
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::PathFamily;
use crate::oracle::QuadratureSpec;
use crate::photon_state::{ModeSpec, PhotonState};
use crate::sweep::{GridSpec, SweepAxis};

/// Environment variable providing the default worker count.
pub const JOBS_ENV: &str = "RECOHERENCE_LAB_JOBS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "jsonl",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" | "jsonl" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!("unknown output format `{other}` (expected csv or json)"))),
        }
    }
}

// ---- file schema -------------------------------------------------------

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
    pub path: Option<PathSection>,
    pub mode: Option<ModeSection>,
    pub state: Option<StateSection>,
    pub sweep: Option<SweepSection>,
    pub oracle: Option<OracleSection>,
    pub fringe: Option<FringeSection>,
    pub output: Option<OutputSection>,
    pub units: Option<UnitsSection>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathSection {
    #[serde(rename = "R_over_T")]
    pub r_over_t: Option<f64>,
    #[serde(rename = "t0_over_T")]
    pub t0_over_t: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeSection {
    #[serde(rename = "omega_bar_T")]
    pub omega_bar_t: Option<f64>,
    #[serde(rename = "V_over_lambda3")]
    pub v_over_lambda3: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateSection {
    pub kind: Option<String>,
    pub r: Option<f64>,
    pub theta: Option<f64>,
    pub nbar: Option<f64>,
    pub amplitude: Option<f64>,
    pub phase: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    #[serde(default)]
    pub axes: Vec<AxisSection>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisSection {
    pub param: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    #[serde(default)]
    pub spacing: Option<String>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSection {
    pub tuples: Option<usize>,
    pub n_panels: Option<usize>,
    pub nodes_per_panel: Option<usize>,
    pub max_panels: Option<usize>,
    pub rel_tol: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FringeSection {
    pub n_samples: Option<usize>,
    pub sigma_sq: Option<f64>,
    pub mean_phase: Option<f64>,
    pub n_screen_bins: Option<usize>,
    pub amplitude: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub dir: Option<PathBuf>,
    pub format: Option<String>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitsSection {
    #[serde(rename = "T_seconds")]
    pub t_seconds: Option<f64>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }
}

// ---- resolved configuration ---------------------------------------------

/// The photon state as written in configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StateConfig {
    pub kind: StateKind,
    pub r: f64,
    pub theta: f64,
    pub nbar: f64,
    pub amplitude: f64,
    pub phase: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Vacuum,
    Squeezed,
    Thermal,
    Classical,
}

impl StateKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "vacuum" => Ok(StateKind::Vacuum),
            "squeezed" => Ok(StateKind::Squeezed),
            "thermal" => Ok(StateKind::Thermal),
            "classical" => Ok(StateKind::Classical),
            other => Err(Error::Config(format!(
                "state.kind: unknown state `{other}` (expected vacuum, squeezed, thermal or classical)"
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StateKind::Vacuum => "vacuum",
            StateKind::Squeezed => "squeezed",
            StateKind::Thermal => "thermal",
            StateKind::Classical => "classical",
        }
    }
}

impl Default for StateConfig {
    fn default() -> Self {
        StateConfig { kind: StateKind::Squeezed, r: 1.0, theta: 0.0, nbar: 0.0, amplitude: 0.0, phase: 0.0 }
    }
}

impl StateConfig {
    pub fn build(&self) -> Result<PhotonState> {
        match self.kind {
            StateKind::Vacuum => Ok(PhotonState::Vacuum),
            StateKind::Squeezed => PhotonState::squeezed(self.r, self.theta),
            StateKind::Thermal => PhotonState::thermal(self.nbar),
            StateKind::Classical => PhotonState::classical(self.amplitude, self.phase),
        }
    }
}

/// A single dimensionless parameter point (`T = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointConfig {
    #[serde(rename = "R_over_T")]
    pub r_over_t: f64,
    #[serde(rename = "t0_over_T")]
    pub t0_over_t: f64,
    #[serde(rename = "omega_bar_T")]
    pub omega_bar_t: f64,
    #[serde(rename = "V_over_lambda3")]
    pub v_over_lambda3: f64,
    pub state: StateConfig,
}

impl Default for PointConfig {
    fn default() -> Self {
        PointConfig { r_over_t: 0.05, t0_over_t: 0.0, omega_bar_t: 3.0, v_over_lambda3: 1.0, state: StateConfig::default() }
    }
}

impl PointConfig {
    pub fn path(&self) -> Result<PathFamily> {
        PathFamily::dimensionless(self.r_over_t, self.t0_over_t)
    }

    pub fn mode(&self) -> Result<ModeSpec> {
        ModeSpec::dimensionless(self.omega_bar_t, self.v_over_lambda3)
    }

    pub fn validate(&self) -> Result<()> {
        self.path()?;
        self.mode()?;
        self.state.build()?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleConfig {
    pub tuples: usize,
    pub quadrature: QuadratureSpec,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { tuples: 20, quadrature: QuadratureSpec::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FringeConfig {
    pub n_samples: usize,
    pub sigma_sq: f64,
    pub mean_phase: f64,
    pub n_screen_bins: usize,
    /// Classical phase amplitude for the sinusoidal run.
    pub amplitude: f64,
}

impl Default for FringeConfig {
    fn default() -> Self {
        FringeConfig { n_samples: 100_000, sigma_sq: 0.5, mean_phase: 0.0, n_screen_bins: 64, amplitude: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputConfig {
    pub dir: Option<PathBuf>,
    pub format: OutputFormat,
}

/// Fully resolved configuration, recorded verbatim in output headers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub jobs: usize,
    pub point: PointConfig,
    pub sweep: Vec<SweepAxis>,
    pub oracle: OracleConfig,
    pub fringe: FringeConfig,
    pub output: OutputConfig,
    #[serde(rename = "T_seconds")]
    pub t_seconds: Option<f64>,
}

pub fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&j| j > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            jobs: 1,
            point: PointConfig::default(),
            sweep: Vec::new(),
            oracle: OracleConfig::default(),
            fringe: FringeConfig::default(),
            output: OutputConfig { dir: None, format: OutputFormat::Csv },
            t_seconds: None,
        }
    }
}

impl RunConfig {
    /// Layer a parsed file over the defaults.
    pub fn from_file(file: &FileConfig) -> Result<Self> {
        let mut cfg = RunConfig { jobs: default_jobs(), ..RunConfig::default() };
        if let Some(seed) = file.seed {
            cfg.seed = seed;
        }
        if let Some(jobs) = file.jobs {
            if jobs == 0 {
                return Err(Error::Config("jobs: must be ≥ 1".into()));
            }
            cfg.jobs = jobs;
        }
        if let Some(p) = &file.path {
            set(&mut cfg.point.r_over_t, p.r_over_t);
            set(&mut cfg.point.t0_over_t, p.t0_over_t);
        }
        if let Some(m) = &file.mode {
            set(&mut cfg.point.omega_bar_t, m.omega_bar_t);
            set(&mut cfg.point.v_over_lambda3, m.v_over_lambda3);
        }
        if let Some(s) = &file.state {
            let st = &mut cfg.point.state;
            if let Some(kind) = &s.kind {
                st.kind = StateKind::parse(kind)?;
            }
            set(&mut st.r, s.r);
            set(&mut st.theta, s.theta);
            set(&mut st.nbar, s.nbar);
            set(&mut st.amplitude, s.amplitude);
            set(&mut st.phase, s.phase);
        }
        if let Some(sw) = &file.sweep {
            cfg.sweep = sw
                .axes
                .iter()
                .enumerate()
                .map(|(i, a)| {
                    let grid = GridSpec::new(a.start, a.stop, a.count, a.spacing.as_deref().unwrap_or("linear"))
                        .map_err(|e| Error::Config(format!("sweep.axes[{i}]: {e}")))?;
                    SweepAxis::new(&a.param, grid).map_err(|e| Error::Config(format!("sweep.axes[{i}]: {e}")))
                })
                .collect::<Result<_>>()?;
        }
        if let Some(o) = &file.oracle {
            set(&mut cfg.oracle.tuples, o.tuples);
            let q = &mut cfg.oracle.quadrature;
            set(&mut q.n_panels, o.n_panels);
            set(&mut q.nodes_per_panel, o.nodes_per_panel);
            set(&mut q.max_panels, o.max_panels);
            set(&mut q.rel_tol, o.rel_tol);
        }
        if let Some(f) = &file.fringe {
            set(&mut cfg.fringe.n_samples, f.n_samples);
            set(&mut cfg.fringe.sigma_sq, f.sigma_sq);
            set(&mut cfg.fringe.mean_phase, f.mean_phase);
            set(&mut cfg.fringe.n_screen_bins, f.n_screen_bins);
            set(&mut cfg.fringe.amplitude, f.amplitude);
        }
        if let Some(o) = &file.output {
            if let Some(dir) = &o.dir {
                cfg.output.dir = Some(dir.clone());
            }
            if let Some(fmt) = &o.format {
                cfg.output.format = OutputFormat::parse(fmt)?;
            }
        }
        if let Some(u) = &file.units {
            cfg.t_seconds = u.t_seconds;
        }
        Ok(cfg)
    }

    /// Check physical invariants of the resolved point.
    pub fn validate(&self) -> Result<()> {
        self.point.validate()?;
        self.oracle.quadrature.validate()?;
        if let Some(t) = self.t_seconds {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::Domain(format!("T_seconds must be > 0, got {t}")));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("config is serializable")
    }
}

fn set<T: Copy>(slot: &mut T, value: Option<T>) {
    if let Some(v) = value {
        *slot = v;
    }
}
