//! Figure data: `g` against emission time, its minimum against `r`, the
//! window average `g̃(r)` and the window width `ω̄Δt(r)`.
//!
//! The emission-time axis is the dimensionless phase `ω̄t₀`.

use std::f64::consts::PI;

use crate::coherence::{g_avg, g_function, g_min, window_phase_width};
use crate::error::{Error, Result};
use crate::geometry::PathFamily;
use crate::photon_state::{ModeSpec, SqueezedVacuum};
use crate::table::{Cell, Table};

/// Emission-time curves for `fig2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Fig2Spec {
    pub r_values: Vec<f64>,
    pub theta: f64,
    pub omega_bar_t: f64,
    /// Samples per half period (`π` in `ω̄t₀`).
    pub points_per_period: usize,
    pub periods: usize,
}

impl Default for Fig2Spec {
    fn default() -> Self {
        Fig2Spec { r_values: vec![0.5, 1.0, 2.0], theta: 0.0, omega_bar_t: 3.0, points_per_period: 200, periods: 2 }
    }
}

/// Columns `(r, omega_bar_t0, g)`, one block per `r`.
pub fn fig2_curves(spec: &Fig2Spec) -> Result<Table> {
    if spec.points_per_period == 0 || spec.periods == 0 {
        return Err(Error::Argument("fig2 needs at least one period and one point per period".into()));
    }
    let mode = ModeSpec::dimensionless(spec.omega_bar_t, 1.0)?;
    let w = mode.omega_bar();
    let n = spec.points_per_period * spec.periods;
    let mut table = Table::new(&["r", "omega_bar_t0", "g"]);
    for &r in &spec.r_values {
        let sq = SqueezedVacuum::new(r, spec.theta)?;
        for k in 0..=n {
            let x = PI * k as f64 / spec.points_per_period as f64;
            // Path shape does not enter g.
            let path = PathFamily::dimensionless(0.01, x / w)?;
            table.push(vec![Cell::Num(r), Cell::Num(x), Cell::Num(g_function(&sq, &path, &mode))]);
        }
    }
    Ok(table)
}

/// Columns `(r, g_min)`.
pub fn fig2_minimum(r_values: &[f64]) -> Table {
    let mut table = Table::new(&["r", "g_min"]);
    for &r in r_values {
        table.push(vec![Cell::Num(r), Cell::Num(g_min(r))]);
    }
    table
}

/// Columns `(r, g_avg, delta_t_times_omega)`.
pub fn fig3(r_values: &[f64]) -> Result<Table> {
    let mut table = Table::new(&["r", "g_avg", "delta_t_times_omega"]);
    for &r in r_values {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::Domain(format!("fig3 needs r > 0, got {r}")));
        }
        table.push(vec![Cell::Num(r), Cell::Num(g_avg(r)), Cell::Num(window_phase_width(r))]);
    }
    Ok(table)
}

/// Outcome of one qualitative-shape assertion.
#[derive(Debug, Clone, PartialEq)]
pub struct ShapeCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: String) -> ShapeCheck {
    ShapeCheck { name: name.to_string(), passed, detail }
}

fn strictly_decreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] < w[0])
}

/// `g` oscillates with period `π` in `ω̄t₀` and dips below zero for `r > 0`;
/// `g_min(r)` decreases toward `−1/2`.
pub fn fig2_shape(curves: &Table, minimum: &Table, points_per_period: usize) -> Result<Vec<ShapeCheck>> {
    let r = curves.numeric_column("r")?;
    let g = curves.numeric_column("g")?;
    let mut out = Vec::new();
    let mut start = 0;
    while start < r.len() {
        let rv = r[start];
        let end = r[start..].iter().position(|&x| x != rv).map_or(r.len(), |p| start + p);
        let block = &g[start..end];
        let lo = block.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = block.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let scale = 1.0 + rv.sinh() * rv.cosh();
        let periodic = block.len() > points_per_period
            && block.iter().zip(&block[points_per_period..]).all(|(a, b)| (a - b).abs() <= 1e-9 * scale);
        if rv > 0.0 {
            out.push(check(&format!("fig2 r={rv}: dips below zero"), lo < 0.0 && hi > 0.0, format!("min {lo}, max {hi}")));
            out.push(check(
                &format!("fig2 r={rv}: minimum respects bound"),
                lo >= g_min(rv) - 1e-12 * scale && lo > -0.5,
                format!("scan min {lo}, analytic {}", g_min(rv)),
            ));
        }
        out.push(check(&format!("fig2 r={rv}: period π in ω̄t₀"), periodic, format!("{} samples", block.len())));
        start = end;
    }
    let gm = minimum.numeric_column("g_min")?;
    out.push(check(
        "fig2 g_min decreasing toward −1/2",
        strictly_decreasing(&gm) && gm.iter().all(|&v| v > -0.5 && v < 0.0),
        format!("last {:?}", gm.last()),
    ));
    Ok(out)
}

/// `g̃` decreases toward `−1/3`; `ω̄Δt` decreases from `π/2`.
pub fn fig3_shape(table: &Table) -> Result<Vec<ShapeCheck>> {
    let ga = table.numeric_column("g_avg")?;
    let dt = table.numeric_column("delta_t_times_omega")?;
    Ok(vec![
        check(
            "fig3 g_avg strictly decreasing above −1/3",
            strictly_decreasing(&ga) && ga.iter().all(|&v| v > -1.0 / 3.0 && v < 0.0),
            format!("first {:?}, last {:?}", ga.first(), ga.last()),
        ),
        check(
            "fig3 window width strictly decreasing below π/2",
            strictly_decreasing(&dt) && dt.iter().all(|&v| v > 0.0 && v < PI / 2.0),
            format!("first {:?}, last {:?}", dt.first(), dt.last()),
        ),
    ])
}
