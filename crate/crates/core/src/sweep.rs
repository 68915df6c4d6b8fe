//! Parameter grids and per-point evaluation of the coherence functional.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coherence::coherence_functional;
use crate::config::{PointConfig, StateKind};
use crate::error::{Error, Result};
use crate::table::{Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

/// `count` points from `start` to `stop` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(start: f64, stop: f64, count: usize, spacing: &str) -> Result<Self> {
        let spacing = match spacing {
            "lin" | "linear" => Spacing::Linear,
            "log" => Spacing::Log,
            other => return Err(Error::Argument(format!("unknown spacing `{other}` (expected lin or log)"))),
        };
        if count == 0 {
            return Err(Error::Argument("grid needs at least one point".into()));
        }
        if !(start.is_finite() && stop.is_finite()) {
            return Err(Error::Argument("grid bounds must be finite".into()));
        }
        if spacing == Spacing::Log && !(start > 0.0 && stop > 0.0) {
            return Err(Error::Argument("log grid bounds must be positive".into()));
        }
        Ok(GridSpec { start, stop, count, spacing })
    }

    /// Parse `lin:start:stop:count` or `log:start:stop:count`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(Error::Argument(format!("grid `{s}` is not of the form lin|log:start:stop:count")));
        }
        let num = |p: &str| p.parse::<f64>().map_err(|_| Error::Argument(format!("grid `{s}`: bad number `{p}`")));
        let count = parts[3].parse::<usize>().map_err(|_| Error::Argument(format!("grid `{s}`: bad count")))?;
        Self::new(num(parts[1])?, num(parts[2])?, count, parts[0])
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|k| {
                if k == 0 {
                    return self.start;
                }
                if k + 1 == self.count {
                    return self.stop;
                }
                let f = k as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.start + (self.stop - self.start) * f,
                    Spacing::Log => (self.start.ln() + (self.stop.ln() - self.start.ln()) * f).exp(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepParam {
    #[serde(rename = "r")]
    R,
    #[serde(rename = "theta")]
    Theta,
    #[serde(rename = "t0_over_T")]
    T0OverT,
    #[serde(rename = "omega_bar_T")]
    OmegaBarT,
    #[serde(rename = "R_over_T")]
    ROverT,
    #[serde(rename = "nbar")]
    Nbar,
}

impl SweepParam {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "r" => SweepParam::R,
            "theta" => SweepParam::Theta,
            "t0_over_T" | "t0/T" | "t0-over-T" => SweepParam::T0OverT,
            "omega_bar_T" | "omega-bar-T" => SweepParam::OmegaBarT,
            "R_over_T" | "R/T" | "R-over-T" => SweepParam::ROverT,
            "nbar" => SweepParam::Nbar,
            other => {
                return Err(Error::Argument(format!(
                    "unknown sweep parameter `{other}` (expected r, theta, t0_over_T, omega_bar_T, R_over_T or nbar)"
                )))
            }
        })
    }

    fn apply(self, p: &mut PointConfig, v: f64) {
        match self {
            SweepParam::R => p.state.r = v,
            SweepParam::Theta => p.state.theta = v,
            SweepParam::T0OverT => p.t0_over_t = v,
            SweepParam::OmegaBarT => p.omega_bar_t = v,
            SweepParam::ROverT => p.r_over_t = v,
            SweepParam::Nbar => p.state.nbar = v,
        }
    }

    fn required_state(self) -> Option<StateKind> {
        match self {
            SweepParam::R | SweepParam::Theta => Some(StateKind::Squeezed),
            SweepParam::Nbar => Some(StateKind::Thermal),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepAxis {
    pub param: SweepParam,
    pub grid: GridSpec,
}

impl SweepAxis {
    pub fn new(param: &str, grid: GridSpec) -> Result<Self> {
        Ok(SweepAxis { param: SweepParam::parse(param)?, grid })
    }

    /// Parse `name=lin:start:stop:count`.
    pub fn parse(s: &str) -> Result<Self> {
        let (name, grid) =
            s.split_once('=').ok_or_else(|| Error::Argument(format!("sweep axis `{s}` is not of the form name=grid")))?;
        Self::new(name, GridSpec::parse(grid)?)
    }
}

pub const POINT_COLUMNS: [&str; 15] = [
    "state",
    "r",
    "theta",
    "nbar",
    "t0_over_T",
    "omega_bar_T",
    "R_over_T",
    "V_over_lambda3",
    "M",
    "g",
    "WR",
    "W0_mode",
    "W_total",
    "Gamma",
    "in_window",
];

/// Evaluate one parameter point into a table row.
pub fn point_row(p: &PointConfig) -> Result<Vec<Cell>> {
    let state = p.state.build()?;
    let res = coherence_functional(&state, &p.path()?, &p.mode()?)?;
    let (r, theta, nbar) = match p.state.kind {
        StateKind::Squeezed => (p.state.r, p.state.theta, 0.0),
        StateKind::Thermal => (0.0, 0.0, p.state.nbar),
        _ => (0.0, 0.0, 0.0),
    };
    let in_window = p.state.kind == StateKind::Squeezed && res.g_state < 0.0;
    Ok(vec![
        Cell::Text(p.state.kind.name().into()),
        Cell::Num(r),
        Cell::Num(theta),
        Cell::Num(nbar),
        Cell::Num(p.t0_over_t),
        Cell::Num(p.omega_bar_t),
        Cell::Num(p.r_over_t),
        Cell::Num(p.v_over_lambda3),
        Cell::Num(res.overlap),
        Cell::Num(res.g_state),
        Cell::Num(res.wr),
        Cell::Num(res.w0_mode),
        Cell::Num(res.w_total_mode),
        Cell::Num(res.contrast_factor),
        Cell::Bool(in_window),
    ])
}

/// Expand one or two axes into grid points, first axis slowest.
pub fn grid_points(base: &PointConfig, axes: &[SweepAxis]) -> Result<Vec<PointConfig>> {
    if axes.is_empty() || axes.len() > 2 {
        return Err(Error::Argument(format!("a sweep takes one or two axes, got {}", axes.len())));
    }
    for a in axes {
        if let Some(kind) = a.param.required_state() {
            if base.state.kind != kind {
                return Err(Error::Argument(format!(
                    "sweeping {:?} requires a {} state, configured state is {}",
                    a.param,
                    kind.name(),
                    base.state.kind.name()
                )));
            }
        }
    }
    if base.state.kind == StateKind::Classical {
        return Err(Error::Argument("classical states have no coherence functional to sweep".into()));
    }
    let mut points = vec![*base];
    for a in axes {
        let values = a.grid.values();
        points = points
            .iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut q = *p;
                    a.param.apply(&mut q, v);
                    q
                })
            })
            .collect();
    }
    Ok(points)
}

/// Evaluate a grid on `jobs` workers; rows come back in grid order.
pub fn sweep(base: &PointConfig, axes: &[SweepAxis], jobs: usize) -> Result<Table> {
    let points = grid_points(base, axes)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Argument(format!("cannot start worker pool: {e}")))?;
    let rows: Vec<Result<Vec<Cell>>> = pool.install(|| points.par_iter().map(point_row).collect());
    let mut table = Table::new(&POINT_COLUMNS);
    for row in rows {
        table.push(row?);
    }
    Ok(table)
}

/// Rebuild the parameter point described by a row of a point table.
pub fn point_from_row(table: &Table, row: &[Cell]) -> Result<PointConfig> {
    let get = |name: &str| -> Result<f64> {
        let i = table.column_index(name).ok_or_else(|| Error::Config(format!("table lacks column `{name}`")))?;
        row[i].as_f64().ok_or_else(|| Error::Config(format!("column `{name}` is not numeric")))
    };
    let kind_idx = table.column_index("state").ok_or_else(|| Error::Config("table lacks column `state`".into()))?;
    let kind = StateKind::parse(row[kind_idx].as_str().unwrap_or(""))?;
    let mut p = PointConfig {
        r_over_t: get("R_over_T")?,
        t0_over_t: get("t0_over_T")?,
        omega_bar_t: get("omega_bar_T")?,
        v_over_lambda3: get("V_over_lambda3")?,
        ..PointConfig::default()
    };
    p.state.kind = kind;
    p.state.r = get("r")?;
    p.state.theta = get("theta")?;
    p.state.nbar = get("nbar")?;
    Ok(p)
}

/// Recompute every row of a point table from its input columns.
pub fn replay(table: &Table) -> Result<Table> {
    let mut out = Table { metadata: table.metadata.clone(), ..Table::new(&POINT_COLUMNS) };
    for row in &table.rows {
        out.push(point_row(&point_from_row(table, row)?)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn squeezed_base() -> PointConfig {
        PointConfig::default()
    }

    #[test]
    fn grid_values() {
        let g = GridSpec::parse("lin:0:1:5").unwrap();
        assert_eq!(g.values(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let g = GridSpec::parse("log:0.05:6:60").unwrap();
        let v = g.values();
        assert_eq!(v.len(), 60);
        assert_eq!(v[0], 0.05);
        assert_eq!(v[59], 6.0);
        assert!(v.windows(2).all(|w| w[1] > w[0]));
        assert!(GridSpec::parse("log:0:1:3").is_err());
        assert!(GridSpec::parse("cubic:0:1:3").is_err());
        assert!(GridSpec::parse("lin:0:1").is_err());
    }

    #[test]
    fn single_point_sweep_equals_point_row() {
        let base = squeezed_base();
        let axis = SweepAxis::parse("t0_over_T=lin:0.3:0.3:1").unwrap();
        let t = sweep(&base, &[axis], 2).unwrap();
        let mut p = base;
        p.t0_over_t = 0.3;
        assert_eq!(t.rows, vec![point_row(&p).unwrap()]);
    }

    #[test]
    fn rows_in_grid_order_regardless_of_jobs() {
        let base = squeezed_base();
        let axes =
            [SweepAxis::parse("r=lin:0.1:2:7").unwrap(), SweepAxis::parse("t0_over_T=lin:0:3:11").unwrap()];
        let a = sweep(&base, &axes, 1).unwrap();
        let b = sweep(&base, &axes, 8).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rows.len(), 77);
        let r = a.numeric_column("r").unwrap();
        assert_eq!(r[0], 0.1);
        assert_eq!(r[10], 0.1);
        assert!(r[11] > 0.1);
    }

    #[test]
    fn full_period_mean_of_g() {
        // One period of g in t₀/T is π/ω̄T; drop the duplicated endpoint.
        let base = squeezed_base();
        let period = std::f64::consts::PI / base.omega_bar_t;
        let n = 257;
        let axis = SweepAxis { param: SweepParam::T0OverT, grid: GridSpec::new(0.0, period, n, "lin").unwrap() };
        let t = sweep(&base, &[axis], 2).unwrap();
        let g = t.numeric_column("g").unwrap();
        let mean = g[..n - 1].iter().sum::<f64>() / (n - 1) as f64;
        let expected = 1f64.sinh().powi(2);
        assert!((mean - expected).abs() < 1e-12);
    }

    #[test]
    fn state_mismatch_and_unknown_parameters() {
        let base = squeezed_base();
        assert!(SweepAxis::parse("mass=lin:0:1:3").is_err());
        let axis = SweepAxis::parse("nbar=lin:0:1:3").unwrap();
        assert_eq!(sweep(&base, &[axis], 1).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn replay_reproduces_table() {
        let base = squeezed_base();
        let axes = [SweepAxis::parse("theta=lin:0:6:13").unwrap()];
        let t = sweep(&base, &axes, 3).unwrap();
        let back = Table::from_csv(&t.to_csv()).unwrap();
        assert_eq!(replay(&back).unwrap(), t);
    }
}
