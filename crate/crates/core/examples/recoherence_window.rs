//! Locate the emission-time windows in which squeezing reduces decoherence,
//! and the window-averaged gain.

use recoherence_lab::coherence::{averaged_wr, g_avg, g_min, recoherence_window, recoherence_windows_in, window_phase_width};
use recoherence_lab::geometry::PathFamily;
use recoherence_lab::photon_state::{ModeSpec, SqueezedVacuum};
use recoherence_lab::Result;

pub fn run() -> Result<()> {
    let path = PathFamily::dimensionless(0.05, 0.0)?;
    let mode = ModeSpec::dimensionless(3.0, 1.0)?;

    println!("{:>5} {:>10} {:>10} {:>10}", "r", "g_min", "g_avg", "ω̄Δt");
    for r in [0.25, 0.5, 1.0, 2.0, 4.0] {
        println!("{r:>5} {:>10.6} {:>10.6} {:>10.6}", g_min(r), g_avg(r), window_phase_width(r));
    }

    let sq = SqueezedVacuum::new(1.0, 0.0)?;
    let w = recoherence_window(&sq, &path, &mode).expect("r > 0 has windows");
    println!("first window: t0/T in [{:.6}, {:.6}]", w.t_i, w.t_f);
    let all = recoherence_windows_in(&sq, &path, &mode, 0.0, 4.0);
    println!("{} windows in t0/T ∈ [0, 4], spaced by π/ω̄ = {:.6}", all.len(), std::f64::consts::PI / mode.omega_bar());
    assert!(all.windows(2).all(|p| (p[1].t_i - p[0].t_i - std::f64::consts::PI / mode.omega_bar()).abs() < 1e-12));
    println!("window-averaged W_R = {:.6e}", averaged_wr(&sq, &path, &mode)?);

    // Without squeezing there is nothing to average over.
    let none = SqueezedVacuum::new(0.0, 0.0)?;
    assert!(recoherence_window(&none, &path, &mode).is_none());
    assert!(averaged_wr(&none, &path, &mode).is_err());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
