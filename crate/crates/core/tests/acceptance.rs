//! Acceptance suite. Each criterion prints one PASS/FAIL line with its
//! measured detail and runtime; the target fails if any criterion fails.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use recoherence_lab::coherence::{
    coherence_functional, g_avg, g_function, g_min, mode_overlap, recoherence_window, window_phase_width,
};
use recoherence_lab::estimates::{bandwidth_estimate, cavity_estimate, BandwidthSpec};
use recoherence_lab::figures::{fig2_shape, fig3_shape};
use recoherence_lab::geometry::PathFamily;
use recoherence_lab::oracle::{
    compare_squeezed, fringe_contrast, random_tuples, relative_spread, FringeExperiment, QuadratureSpec,
};
use recoherence_lab::photon_state::{ModeSpec, PhotonState, SqueezedVacuum};
use recoherence_lab::special::{bessel_j0, find_roots};
use recoherence_lab::sweep::{replay, GridSpec};
use recoherence_lab::table::Table;

const SEED: u64 = 20251016;

struct Verdict {
    passed: bool,
    detail: String,
    /// `W_total_mode` of every evaluated tuple, collected for the unitarity criterion.
    w_totals: Vec<f64>,
}

fn verdict(passed: bool, detail: String) -> Verdict {
    Verdict { passed, detail, w_totals: Vec::new() }
}

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_recoherence-lab")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("recoherence-acceptance-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

fn run_cli(args: &[&str]) -> Result<(), String> {
    let out = Command::new(binary()).args(args).output().map_err(|e| e.to_string())?;
    if out.status.success() {
        Ok(())
    } else {
        Err(format!("{args:?} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)))
    }
}

/// Everything after the `#` metadata lines of a CSV, or after the head line of JSON lines.
fn data_section(path: &Path) -> String {
    let text = std::fs::read_to_string(path).unwrap_or_default();
    if path.extension().is_some_and(|e| e == "jsonl") {
        text.lines().skip(1).map(|l| format!("{l}\n")).collect()
    } else {
        text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect()
    }
}

fn squeezed_point(r: f64, theta: f64, t0: f64) -> (SqueezedVacuum, PathFamily, ModeSpec) {
    (
        SqueezedVacuum::new(r, theta).unwrap(),
        PathFamily::dimensionless(0.05, t0).unwrap(),
        ModeSpec::dimensionless(3.0, 1.0).unwrap(),
    )
}

fn c1_vacuum_identity() -> Verdict {
    let mut ok = true;
    let mut w = Vec::new();
    for (rt, t0, x, v) in [(0.05, 0.0, 3.0, 1.0), (0.01, 1.3, 0.7, 0.2), (0.3, 2.2, 11.0, 40.0)] {
        let path = PathFamily::dimensionless(rt, t0).unwrap();
        let mode = ModeSpec::dimensionless(x, v).unwrap();
        for st in [PhotonState::Vacuum, PhotonState::squeezed(0.0, 0.0).unwrap(), PhotonState::squeezed(0.0, 2.5).unwrap()] {
            let res = coherence_functional(&st, &path, &mode).unwrap();
            ok &= res.wr == 0.0 && res.contrast_factor == res.w0_mode.exp() && res.w_total_mode == res.w0_mode;
            w.push(res.w_total_mode);
        }
    }
    Verdict { passed: ok, detail: "W_R = 0 and Γ = exp(W₀) bit-for-bit at 9 points".into(), w_totals: w }
}

fn c2_g_bound() -> Verdict {
    let mut worst = 0.0_f64;
    let mut above = true;
    let mut w = Vec::new();
    for r in [0.1, 0.5, 1.0, 2.0, 4.0, 8.0] {
        let (sq, path, mode) = squeezed_point(r, 0.9, 0.0);
        let win = recoherence_window(&sq, &path, &mode).unwrap();
        let centre = 0.5 * (win.t_i + win.t_f);
        let period = PI / mode.omega_bar();
        let mut lo = f64::INFINITY;
        for k in 0..1000 {
            let p = PathFamily::dimensionless(0.05, centre + period * k as f64 / 1000.0).unwrap();
            lo = lo.min(g_function(&sq, &p, &mode));
            if k % 100 == 0 {
                w.push(coherence_functional(&PhotonState::Squeezed(sq), &p, &mode).unwrap().w_total_mode);
            }
        }
        worst = worst.max((lo - g_min(r)).abs());
        above &= lo > -0.5;
    }
    Verdict {
        passed: worst < 1e-12 && above,
        detail: format!("max |min g − g_min| = {worst:.2e}, all minima > −1/2: {above}"),
        w_totals: w,
    }
}

/// Average of g over the window by the midpoint rule.
fn numeric_window_average(r: f64) -> f64 {
    let (sq, path, mode) = squeezed_point(r, 0.0, 0.0);
    let win = recoherence_window(&sq, &path, &mode).unwrap();
    let n = 20_000;
    let h = (win.t_f - win.t_i) / n as f64;
    let sum: f64 = (0..n)
        .map(|k| g_function(&sq, &PathFamily::dimensionless(0.05, win.t_i + h * (k as f64 + 0.5)).unwrap(), &mode))
        .sum();
    sum / n as f64
}

fn c3_g_avg_bound() -> Verdict {
    let rs = GridSpec::parse("log:0.05:8:60").unwrap().values();
    let ga: Vec<f64> = rs.iter().map(|&r| g_avg(r)).collect();
    let decreasing = ga.windows(2).all(|p| p[1] < p[0]);
    let bounded = ga.iter().all(|&g| g > -1.0 / 3.0);
    let at1 = g_avg(1.0);
    let at4 = g_avg(4.0);
    let cross = [0.1, 1.0, 4.0].iter().map(|&r| (numeric_window_average(r) - g_avg(r)).abs()).fold(0.0, f64::max);
    let value1 = (at1 + 0.28742).abs() < 1e-4;
    let value4 = (at4 + 1.0 / 3.0).abs() < 5e-4;
    Verdict {
        passed: decreasing && bounded && value1 && value4 && cross < 1e-6,
        detail: format!(
            "decreasing {decreasing}, > −1/3 {bounded}, g_avg(1) = {at1:.7} (target −0.28742 ± 1e-4: {value1}), \
             |g_avg(4) + 1/3| = {:.2e}, numeric-average mismatch {cross:.1e}",
            (at4 + 1.0 / 3.0).abs()
        ),
        w_totals: Vec::new(),
    }
}

fn c4_window_width() -> Verdict {
    let rs = GridSpec::parse("log:1e-6:8:200").unwrap().values();
    let widths: Vec<f64> = rs.iter().map(|&r| window_phase_width(r)).collect();
    let formula = rs.iter().zip(&widths).map(|(r, w)| (r.tanh().acos() - w).abs()).fold(0.0, f64::max);
    let limit = (window_phase_width(1e-6) - PI / 2.0).abs();
    let decreasing = widths.windows(2).all(|p| p[1] < p[0]);
    let mut from_window = 0.0_f64;
    for r in [0.3, 1.0, 3.0] {
        let (sq, path, mode) = squeezed_point(r, 1.1, 0.0);
        let w = recoherence_window(&sq, &path, &mode).unwrap();
        from_window = from_window.max(((w.t_f - w.t_i) * mode.omega_bar() - window_phase_width(r)).abs());
    }
    Verdict {
        passed: formula < 1e-12 && limit < 1e-6 && decreasing && from_window < 1e-12,
        detail: format!(
            "|ω̄Δt − arccos tanh r| ≤ {formula:.1e}, |ω̄Δt(1e-6) − π/2| = {limit:.2e}, decreasing {decreasing}, window edges {from_window:.1e}"
        ),
        w_totals: Vec::new(),
    }
}

fn c5_overlap() -> Verdict {
    let r = 0.05;
    let path = PathFamily::dimensionless(r, 0.0).unwrap();
    let m = |x: f64| mode_overlap(&path, &ModeSpec::dimensionless(x, 1.0).unwrap());
    let samples: Vec<f64> = (1..=20_000).map(|k| m(k as f64 * 1e-3)).collect();
    let nonneg = samples.iter().all(|&v| v >= 0.0);
    let peak = samples.iter().copied().fold(0.0, f64::max);
    // Zeros of M: sign changes of the signed bracket, then M itself there.
    let bracket = |x: f64| (x * x - 3.0) * x.sin() + 3.0 * x * x.cos();
    let zeros = find_roots(bracket, 1.0, 13.0, 1200, 1e-13);
    let expected = [5.7635, 9.0950, 12.3229];
    let located = zeros.len() == 3 && zeros.iter().zip(expected).all(|(z, e)| (z - e).abs() < 1e-3);
    let vanishes = zeros.iter().all(|&z| m(z) < 1e-12 * peak);
    let x = 0.01;
    let small = (m(x) / (256.0 * r * r * x * x / 225.0) - 1.0).abs();
    let mut w = Vec::new();
    for &z in &zeros {
        let res = coherence_functional(&PhotonState::squeezed(1.0, 0.0).unwrap(), &path, &ModeSpec::dimensionless(z, 1.0).unwrap());
        w.push(res.unwrap().w_total_mode);
    }
    Verdict {
        passed: nonneg && located && vanishes && small < 1e-4,
        detail: format!("M ≥ 0 {nonneg}, zeros {zeros:.6?}, small-x rel error {small:.1e}"),
        w_totals: w,
    }
}

fn c6_oracle() -> Verdict {
    let spec = QuadratureSpec::default();
    let tuples = random_tuples(20, 1.0, SEED).unwrap();
    let mut ratios = Vec::new();
    let mut worst_2g = 0.0_f64;
    let mut w = Vec::new();
    for t in &tuples {
        let rec = compare_squeezed(&t.state, &t.path, &t.mode, &spec, SEED).unwrap();
        ratios.push(rec.ratio);
        worst_2g = worst_2g.max(((rec.vacuum_ratio - 2.0 * rec.closed_g) / (2.0 * rec.closed_g)).abs());
        w.push(coherence_functional(&PhotonState::Squeezed(t.state), &t.path, &t.mode).unwrap().w_total_mode);
    }
    let spread = relative_spread(&ratios);
    Verdict {
        passed: spread < 1e-6 && worst_2g < 1e-6,
        detail: format!("20 tuples, ratio {:.12}, spread {spread:.1e}, |WR/W₀ − 2g|/|2g| ≤ {worst_2g:.1e}", ratios[0]),
        w_totals: w,
    }
}

fn c7_unitarity(previous: &[f64]) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut violations = previous.iter().filter(|&&w| w > 0.0).count();
    for _ in 0..10_000 {
        let path = PathFamily::dimensionless(1e-3 + 0.6 * rng.random::<f64>(), 3.0 * rng.random::<f64>()).unwrap();
        let mode = ModeSpec::dimensionless(1e-2 + 20.0 * rng.random::<f64>(), 1e-2 + 100.0 * rng.random::<f64>()).unwrap();
        let state = match rng.random_range(0..3) {
            0 => PhotonState::Vacuum,
            1 => PhotonState::squeezed(8.0 * rng.random::<f64>(), 2.0 * PI * rng.random::<f64>()).unwrap(),
            _ => PhotonState::thermal(100.0 * rng.random::<f64>()).unwrap(),
        };
        if coherence_functional(&state, &path, &mode).unwrap().w_total_mode > 0.0 {
            violations += 1;
        }
    }
    verdict(violations == 0, format!("{} earlier tuples + 10⁴ fuzz points, {violations} with W_total > 0", previous.len()))
}

fn c8_monte_carlo() -> Verdict {
    let g = fringe_contrast(&FringeExperiment::gaussian(0.5, 0.0, 100_000, SEED)).unwrap();
    let c = fringe_contrast(&FringeExperiment::sinusoidal(1.0, 100_000, SEED)).unwrap();
    let (eg, ec) = ((-0.25f64).exp(), bessel_j0(1.0).abs());
    let zg = (g.contrast - eg).abs() / g.stat_error;
    let zc = (c.contrast - ec).abs() / c.stat_error;
    verdict(
        zg < 3.0 && zc < 3.0,
        format!("Gaussian {:.5} vs {eg:.5} ({zg:.2}σ), classical {:.5} vs {ec:.5} ({zc:.2}σ)", g.contrast, c.contrast),
    )
}

fn c9_estimates() -> Verdict {
    let ulps = |a: f64, b: f64| (a - b).abs() / (b * f64::EPSILON);
    let cav = cavity_estimate(0.1).unwrap();
    let band = bandwidth_estimate(0.1, &BandwidthSpec { delta_omega_over_omega: 0.1, delta_solid_angle: 0.1 }).value;
    let (uc, ub) = (ulps(cav, 1e-7), ulps(band, 1e-6));
    verdict(uc <= 4.0 && ub <= 4.0, format!("cavity {cav:e} ({uc:.1} ulp), bandwidth {band:e} ({ub:.1} ulp)"))
}

fn c10_figures() -> Verdict {
    let dir = scratch("figures");
    let d = dir.to_str().unwrap();
    let run = run_cli(&["fig2", "--r", "0.5", "1.0", "2.0", "--omega-bar-T", "3.0", "--out", d])
        .and_then(|_| run_cli(&["fig3", "--r-grid", "log:0.05:6:60", "--out", d]));
    if let Err(e) = run {
        return verdict(false, e);
    }
    let curves = Table::read(&dir.join("fig2_curves.csv")).unwrap();
    let minimum = Table::read(&dir.join("fig2_gmin.csv")).unwrap();
    let f3 = Table::read(&dir.join("fig3.csv")).unwrap();
    let mut checks = fig2_shape(&curves, &minimum, 200).unwrap();
    checks.extend(fig3_shape(&f3).unwrap());
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    let _ = std::fs::remove_dir_all(&dir);
    verdict(failed.is_empty(), format!("{} shape checks on emitted CSVs, failed: {failed:?}", checks.len()))
}

fn c11_determinism() -> Verdict {
    let runs: [&[&str]; 6] = [
        &["fig2", "--r", "0.5", "1.0", "2.0"],
        &["fig3"],
        &["sweep", "--grid", "t0_over_T=lin:0:1.2:13", "--grid", "r=log:0.1:3:5", "--jobs", "3"],
        &["sweep", "--grid", "omega_bar_T=lin:0.5:12:17", "--format", "json"],
        &["oracle", "--seed", "5", "--n-samples", "20000"],
        &["compute", "--nbar", "2"],
    ];
    let (a, b) = (scratch("det-a"), scratch("det-b"));
    let mut problems = Vec::new();
    let mut files = 0;
    for (i, args) in runs.iter().enumerate() {
        for dir in [&a, &b] {
            let out = dir.join(i.to_string());
            let mut full: Vec<&str> = args.to_vec();
            full.extend(["--out", out.to_str().unwrap()]);
            if let Err(e) = run_cli(&full) {
                problems.push(e);
            }
        }
        let entries = std::fs::read_dir(a.join(i.to_string())).map(|r| r.flatten().map(|e| e.path()).collect::<Vec<_>>());
        for path in entries.unwrap_or_default() {
            files += 1;
            let other = b.join(i.to_string()).join(path.file_name().unwrap());
            if data_section(&path) != data_section(&other) || data_section(&path).is_empty() {
                problems.push(format!("{} differs between runs", path.display()));
            }
            let text = std::fs::read_to_string(&path).unwrap();
            let table = Table::read(&path).unwrap();
            let back = if path.extension().is_some_and(|e| e == "jsonl") { table.to_jsonl() } else { table.to_csv() };
            if back != text {
                problems.push(format!("{} does not re-serialize identically", path.display()));
            }
            if table.column_index("in_window").is_some() && replay(&table).unwrap().rows != table.rows {
                problems.push(format!("{} does not replay identically", path.display()));
            }
        }
    }
    let mc = |s| fringe_contrast(&FringeExperiment::gaussian(0.5, 0.0, 50_000, s)).unwrap();
    if mc(SEED) != mc(SEED) {
        problems.push("Monte Carlo not reproducible".into());
    }
    let _ = std::fs::remove_dir_all(&a);
    let _ = std::fs::remove_dir_all(&b);
    verdict(problems.is_empty() && files >= 8, format!("{files} files compared and re-ingested, problems: {problems:?}"))
}

fn main() {
    let mut failed = 0;
    let mut w_totals = Vec::new();
    let mut report = |n: usize, name: &str, limit: Duration, f: &mut dyn FnMut() -> Verdict| {
        let start = Instant::now();
        let v = f();
        let elapsed = start.elapsed();
        let in_time = elapsed < limit;
        let passed = v.passed && in_time;
        if !passed {
            failed += 1;
        }
        println!(
            "{} criterion {n:>2} {name}: {} [{:.3} s, limit {} s]",
            if passed { "PASS" } else { "FAIL" },
            v.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        v.w_totals
    };
    let s = Duration::from_secs;
    w_totals.extend(report(1, "vacuum identity", s(1), &mut c1_vacuum_identity));
    w_totals.extend(report(2, "g bound", s(1), &mut c2_g_bound));
    w_totals.extend(report(3, "window-averaged g bound", s(1), &mut c3_g_avg_bound));
    w_totals.extend(report(4, "window width", s(1), &mut c4_window_width));
    w_totals.extend(report(5, "mode overlap structure", s(1), &mut c5_overlap));
    w_totals.extend(report(6, "oracle equivalence", s(60), &mut c6_oracle));
    report(7, "unitarity", s(10), &mut || c7_unitarity(&w_totals));
    report(8, "Monte Carlo contrast", s(10), &mut c8_monte_carlo);
    report(9, "magnitude estimates", s(1), &mut c9_estimates);
    report(10, "figure data shape", s(5), &mut c10_figures);
    // No runtime limit is set for this one; 600 s is a hang guard.
    report(11, "determinism and round trip", s(600), &mut c11_determinism);
    println!("{} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
