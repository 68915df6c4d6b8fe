//! The invariant suite behind the `check` subcommand.
//!
//! Each check is a named predicate over one module's properties; the suite
//! passes only when every check passes.

use std::f64::consts::PI;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coherence::{
    coherence_functional, coupling, g_avg, g_function, g_min, mode_overlap, recoherence_window, window_phase_width,
};
use crate::error::Result;
use crate::estimates::{bandwidth_estimate, cavity_estimate, single_mode_estimate, BandwidthSpec, CavityEstimateInput};
use crate::figures::{fig2_curves, fig2_minimum, fig2_shape, fig3, fig3_shape, Fig2Spec};
use crate::geometry::{sample_contour, Branch, PathFamily};
use crate::oracle::{
    compare_squeezed, fringe_contrast, random_tuples, relative_spread, FringeExperiment, QuadratureSpec,
};
use crate::photon_state::{renormalized_correlator, ModeSpec, PhotonState};
use crate::special::{bessel_j0, find_roots, spherical_j2};
use crate::sweep::GridSpec;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub module: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Suite {
    out: Vec<CheckOutcome>,
}

impl Suite {
    fn record(&mut self, module: &'static str, name: &str, passed: bool, detail: String) {
        self.out.push(CheckOutcome { module, name: name.to_string(), passed, detail });
    }
}

/// Run every invariant check. Randomized checks draw from `seed`.
pub fn run_all(seed: u64) -> Result<Vec<CheckOutcome>> {
    let mut s = Suite { out: Vec::new() };
    geometry(&mut s, seed)?;
    photon_state(&mut s, seed)?;
    coherence(&mut s, seed)?;
    oracle(&mut s, seed)?;
    estimates(&mut s)?;
    figures(&mut s)?;
    Ok(s.out)
}

fn geometry(s: &mut Suite, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6e0);
    let (mut reversal, mut covariance, mut antisym) = (0.0_f64, 0.0_f64, 0.0_f64);
    for _ in 0..1000 {
        let r = 1e-3 + 0.5 * rng.random::<f64>();
        let t0 = 10.0 * rng.random::<f64>() - 5.0;
        let p = PathFamily::dimensionless(r, t0)?;
        let u = rng.random::<f64>();
        reversal = reversal.max((p.position(t0 + 1.0 + u, Branch::Upper)? - p.position(t0 + 1.0 - u, Branch::Upper)?).abs() / r);
        let base = PathFamily::dimensionless(r, 0.0)?;
        let t = 2.0 * u;
        covariance = covariance.max((p.position(t + t0, Branch::Upper).unwrap_or(f64::NAN) - base.position(t, Branch::Upper)?).abs() / r);
        antisym = antisym.max((p.position(t0 + t, Branch::Upper).unwrap_or(0.0) + p.position(t0 + t, Branch::Lower).unwrap_or(0.0)).abs());
    }
    s.record("geometry", "time-reversal symmetry", reversal < 1e-12, format!("max rel deviation {reversal:e}"));
    s.record("geometry", "emission-time covariance", covariance < 1e-9, format!("max rel deviation {covariance:e}"));
    s.record("geometry", "branch antisymmetry", antisym == 0.0, format!("max |upper + lower| {antisym:e}"));

    let p = PathFamily::new(0.05, 1.3, 0.4)?;
    let t = 1.17;
    let exact = p.velocity(t, Branch::Upper)?;
    let err = |h: f64| -> Result<f64> {
        Ok(((p.position(t + h, Branch::Upper)? - p.position(t - h, Branch::Upper)?) / (2.0 * h) - exact).abs())
    };
    let slope = (err(0.1)?.ln() - err(0.025)?.ln()) / (0.1f64.ln() - 0.025f64.ln());
    s.record("geometry", "velocity is the derivative of position (O(h²))", (slope - 2.0).abs() < 0.1, format!("slope {slope:.4}"));

    let samples = sample_contour(&p, 1001)?;
    let dt = 2.0 * p.half_flight() / 1000.0;
    let closure: f64 = samples
        .iter()
        .enumerate()
        .map(|(k, c)| if k == 0 || k == 1000 { 0.5 } else { 1.0 } * (c.zdot_upper - c.zdot_lower) * dt)
        .sum();
    s.record("geometry", "contour closes", closure.abs() < 1e-13, format!("∮dz = {closure:e}"));
    Ok(())
}

fn photon_state(s: &mut Suite, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9507);
    let mode = ModeSpec::new(1.7, 0.9)?;
    let (mut symmetric, mut thermal_pos) = (true, true);
    for _ in 0..1000 {
        let st = PhotonState::squeezed(3.0 * rng.random::<f64>(), 2.0 * PI * rng.random::<f64>())?;
        let (t, tp) = (10.0 * rng.random::<f64>() - 5.0, 10.0 * rng.random::<f64>() - 5.0);
        symmetric &= renormalized_correlator(&st, &mode, t, tp)? == renormalized_correlator(&st, &mode, tp, t)?;
        let th = PhotonState::thermal(1e-6 + 50.0 * rng.random::<f64>())?;
        thermal_pos &= renormalized_correlator(&th, &mode, t, t)? > 0.0;
    }
    s.record("photon_state", "correlator symmetric in (t, t′)", symmetric, "1000 random pairs".into());
    s.record("photon_state", "thermal equal-time correlator positive", thermal_pos, "1000 random draws".into());

    let unit = ModeSpec::new(1.0, 1.0)?;
    let mut sub_vacuum = true;
    for r in [0.01, 0.1, 0.5, 1.0, 2.0, 4.0] {
        let c = renormalized_correlator(&PhotonState::squeezed(r, 0.0)?, &unit, 0.0, 0.0)?;
        sub_vacuum &= c < 0.0 && (c + r.sinh() * (-r).exp()).abs() < 1e-12 * (1.0 + r.sinh() * r.cosh());
    }
    s.record("photon_state", "squeezed equal-time correlator is sub-vacuum", sub_vacuum, "r ∈ {0.01 … 4}".into());

    let weak = renormalized_correlator(&PhotonState::squeezed(1e-12, 0.3)?, &unit, 0.2, 0.9)?.abs()
        + renormalized_correlator(&PhotonState::thermal(1e-12)?, &unit, 0.2, 0.9)?.abs();
    s.record("photon_state", "weak-state limits reduce to vacuum", weak < 1e-10, format!("residual {weak:e}"));
    Ok(())
}

fn coherence(s: &mut Suite, seed: u64) -> Result<()> {
    let path = PathFamily::dimensionless(0.05, 0.0)?;
    let mode = ModeSpec::dimensionless(3.0, 1.0)?;

    let mut worst = 0.0_f64;
    let mut above_half = true;
    for r in [0.1, 0.5, 1.0, 2.0, 4.0, 8.0] {
        for theta in [0.0, 1.3, 4.0] {
            let sq = crate::photon_state::SqueezedVacuum::new(r, theta)?;
            let w = recoherence_window(&sq, &path, &mode).expect("r > 0");
            // Dense scan over one period, including the window centre.
            let centre = 0.5 * (w.t_i + w.t_f);
            let period = PI / mode.omega_bar();
            let lo = (0..1000)
                .map(|k| centre + period * (k as f64 / 1000.0))
                .map(|t| PathFamily::dimensionless(0.05, t).map(|p| g_function(&sq, &p, &mode)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .fold(f64::INFINITY, f64::min);
            worst = worst.max((lo - g_min(r)).abs());
            above_half &= lo > -0.5;
        }
    }
    s.record("coherence", "min over t₀ of g equals −(1−e^{−2r})/2", worst < 1e-12, format!("max deviation {worst:e}"));
    s.record("coherence", "g > −1/2", above_half, "r ∈ {0.1 … 8}".into());

    let sq = crate::photon_state::SqueezedVacuum::new(1.2, 0.7)?;
    let mut periodic = 0.0_f64;
    for k in 0..200 {
        let t = 0.037 * k as f64;
        let a = g_function(&sq, &PathFamily::dimensionless(0.05, t)?, &mode);
        let b = g_function(&sq, &PathFamily::dimensionless(0.05, t + PI / mode.omega_bar())?, &mode);
        periodic = periodic.max((a - b).abs());
    }
    s.record("coherence", "g periodic with period π/ω̄", periodic < 1e-12, format!("max deviation {periodic:e}"));

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc0);
    let mut violations = 0;
    for _ in 0..10_000 {
        let p = PathFamily::dimensionless(0.001 + 0.6 * rng.random::<f64>(), 3.0 * rng.random::<f64>())?;
        let m = ModeSpec::dimensionless(0.1 + 19.9 * rng.random::<f64>(), 0.01 + 100.0 * rng.random::<f64>())?;
        let states = [
            PhotonState::Vacuum,
            PhotonState::squeezed(8.0 * rng.random::<f64>(), 2.0 * PI * rng.random::<f64>())?,
            PhotonState::thermal(100.0 * rng.random::<f64>())?,
        ];
        for st in states {
            let res = coherence_functional(&st, &p, &m)?;
            if res.w_total_mode > 0.0 || res.w0_mode > 0.0 {
                violations += 1;
            }
        }
    }
    s.record("coherence", "unitarity W₀ + W_R ≤ 0 (10⁴ random points)", violations == 0, format!("{violations} violations"));

    let rs = GridSpec::parse("log:0.05:8:60")?.values();
    let ga: Vec<f64> = rs.iter().map(|&r| g_avg(r)).collect();
    let decreasing = ga.windows(2).all(|w| w[1] < w[0]);
    let bounded = ga.iter().all(|&g| g > -1.0 / 3.0);
    s.record("coherence", "g̃(r) strictly decreasing", decreasing, format!("g̃(8) = {}", ga[59]));
    s.record("coherence", "g̃(r) > −1/3", bounded, format!("closest {:e}", ga[59] + 1.0 / 3.0));
    let widths: Vec<f64> = rs.iter().map(|&r| window_phase_width(r)).collect();
    s.record("coherence", "window width decreasing from π/2", widths.windows(2).all(|w| w[1] < w[0]) && widths[0] < PI / 2.0, String::new());

    let unit_overlap = |x: f64| -> Result<f64> {
        let p = PathFamily::dimensionless(0.05, 0.0)?;
        Ok(mode_overlap(&p, &ModeSpec::dimensionless(x, 1.0)?) / 0.0025)
    };
    let mut nonneg = true;
    for k in 1..=2000 {
        nonneg &= unit_overlap(0.01 * k as f64)? >= 0.0;
    }
    s.record("coherence", "M ≥ 0", nonneg, "ω̄T ∈ (0, 20]".into());
    let j2 = find_roots(spherical_j2, 1.0, 13.0, 600, 1e-13);
    let m_roots = find_roots(|x| -x.powi(3) * spherical_j2(x), 1.0, 13.0, 600, 1e-13);
    let mut max_m = 0.0_f64;
    for &x in &j2 {
        max_m = max_m.max(unit_overlap(x)?);
    }
    let agree = j2.len() == 3 && m_roots.len() == 3 && j2.iter().zip(&m_roots).all(|(a, b)| (a - b).abs() < 1e-10);
    s.record("coherence", "zeros of M are zeros of j₂", agree && max_m < 1e-20, format!("j₂ zeros {j2:?}, max M there {max_m:e}"));

    let mut monotone = true;
    let mut prev = f64::INFINITY;
    for k in 0..100 {
        let res = coherence_functional(&PhotonState::thermal(0.5 * k as f64)?, &path, &mode)?;
        monotone &= res.contrast_factor < prev;
        prev = res.contrast_factor;
    }
    s.record("coherence", "thermal contrast decreases with n̄", monotone, String::new());

    let sq = crate::photon_state::SqueezedVacuum::new(1.5, 2.0)?;
    let w = recoherence_window(&sq, &path, &mode).expect("r > 0");
    let centre = 0.5 * (w.t_i + w.t_f);
    let mut max_wr = f64::NEG_INFINITY;
    let mut sum_g = 0.0;
    let n = 4000;
    for k in 0..n {
        let t = centre + PI / mode.omega_bar() * k as f64 / n as f64;
        let p = PathFamily::dimensionless(0.05, t)?;
        let res = coherence_functional(&PhotonState::Squeezed(sq), &p, &mode)?;
        max_wr = max_wr.max(res.wr);
        sum_g += res.g_state;
    }
    let expected_max = -coupling(&mode) * mode_overlap(&path, &mode) * g_min(1.5);
    s.record(
        "coherence",
        "max over t₀ of W_R at g_min",
        (max_wr - expected_max).abs() < 1e-6 * expected_max,
        format!("{max_wr:e} vs {expected_max:e}"),
    );
    let mean_g = sum_g / n as f64;
    let eta2 = 1.5f64.sinh().powi(2);
    s.record("coherence", "period average of g is sinh²r", (mean_g - eta2).abs() < 1e-10 * eta2, format!("{mean_g} vs {eta2}"));
    Ok(())
}

fn oracle(s: &mut Suite, seed: u64) -> Result<()> {
    let spec = QuadratureSpec::default();
    let tuples = random_tuples(20, 1.0, seed)?;
    let mut ratios = Vec::new();
    let mut worst_2g = 0.0_f64;
    for t in &tuples {
        let rec = compare_squeezed(&t.state, &t.path, &t.mode, &spec, seed)?;
        ratios.push(rec.ratio);
        worst_2g = worst_2g.max(((rec.vacuum_ratio - 2.0 * rec.closed_g) / (2.0 * rec.closed_g)).abs());
    }
    let spread = relative_spread(&ratios);
    s.record("oracle", "quadrature/closed-form ratio constant", spread < 1e-6, format!("spread {spread:e}, ratio {}", ratios[0]));
    s.record("oracle", "numeric W_R / W₀ = 2g", worst_2g < 1e-6, format!("max rel deviation {worst_2g:e}"));

    let gauss = fringe_contrast(&FringeExperiment::gaussian(0.5, 0.0, 100_000, seed))?;
    let e = (-0.25f64).exp();
    s.record(
        "oracle",
        "Gaussian fringe contrast e^{−σ²/2}",
        (gauss.contrast - e).abs() < 3.0 * gauss.stat_error,
        format!("{} ± {} vs {e}", gauss.contrast, gauss.stat_error),
    );
    let classical = fringe_contrast(&FringeExperiment::sinusoidal(1.0, 100_000, seed))?;
    let j = bessel_j0(1.0);
    s.record(
        "oracle",
        "classical fringe contrast |J₀(A)|",
        (classical.contrast - j).abs() < 3.0 * classical.stat_error,
        format!("{} ± {} vs {j}", classical.contrast, classical.stat_error),
    );
    let again = fringe_contrast(&FringeExperiment::gaussian(0.5, 0.0, 100_000, seed))?;
    s.record("oracle", "Monte Carlo deterministic under fixed seed", again == gauss, String::new());
    Ok(())
}

fn estimates(s: &mut Suite) -> Result<()> {
    let close = |a: f64, b: f64| (a - b).abs() <= 4.0 * f64::EPSILON * b.abs();
    s.record("estimates", "cavity estimate at R/T = 0.1 is 10⁻⁷", close(cavity_estimate(0.1)?, 1e-7), String::new());
    let b = bandwidth_estimate(0.1, &BandwidthSpec { delta_omega_over_omega: 0.1, delta_solid_angle: 0.1 });
    s.record("estimates", "bandwidth estimate with factors 10⁻¹ is 10⁻⁶", close(b.value, 1e-6), String::new());
    let single = single_mode_estimate(&CavityEstimateInput { lambda3_over_v: 1.0, r_over_t: 0.1, lambda_over_t: 0.1 });
    let ratio = cavity_estimate(0.1)? / single.value;
    s.record("estimates", "single-mode and cavity estimates agree to rounding", (ratio - 1.25).abs() < 1e-12, format!("ratio {ratio}"));
    let base = CavityEstimateInput { lambda3_over_v: 0.5, r_over_t: 0.05, lambda_over_t: 0.2 };
    let v0 = single_mode_estimate(&base).value;
    let monotone = single_mode_estimate(&CavityEstimateInput { r_over_t: 0.06, ..base }).value > v0
        && single_mode_estimate(&CavityEstimateInput { lambda_over_t: 0.21, ..base }).value > v0
        && single_mode_estimate(&CavityEstimateInput { lambda3_over_v: 0.6, ..base }).value > v0
        && cavity_estimate(0.2)? > cavity_estimate(0.1)?;
    s.record("estimates", "estimates monotone in every factor", monotone, String::new());
    let flagged = !bandwidth_estimate(0.5, &BandwidthSpec { delta_omega_over_omega: 0.1, delta_solid_angle: 0.1 }).is_valid();
    s.record("estimates", "validity flags raised outside smallness", flagged, String::new());
    Ok(())
}

fn figures(s: &mut Suite) -> Result<()> {
    let spec = Fig2Spec::default();
    let curves = fig2_curves(&spec)?;
    let minimum = fig2_minimum(&GridSpec::parse("lin:0.05:3:60")?.values());
    for c in fig2_shape(&curves, &minimum, spec.points_per_period)? {
        s.record("figures", &c.name, c.passed, c.detail);
    }
    for c in fig3_shape(&fig3(&GridSpec::parse("log:0.05:6:60")?.values())?)? {
        s.record("figures", &c.name, c.passed, c.detail);
    }
    Ok(())
}
