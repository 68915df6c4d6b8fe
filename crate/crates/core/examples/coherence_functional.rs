//! Closed-form coherence functional for vacuum, squeezed and thermal states
//! at a single parameter point.

use recoherence_lab::coherence::{coherence_functional, mode_overlap};
use recoherence_lab::geometry::PathFamily;
use recoherence_lab::photon_state::{ModeSpec, PhotonState};
use recoherence_lab::Result;

pub fn run() -> Result<()> {
    let path = PathFamily::dimensionless(0.05, 0.0)?;
    let mode = ModeSpec::dimensionless(3.0, 1.0)?;
    println!("M = {:.6e}", mode_overlap(&path, &mode));

    println!("{:<10} {:>12} {:>14} {:>14} {:>18}", "state", "g", "W_R", "W_total", "Gamma");
    for (label, st) in [
        ("vacuum", PhotonState::Vacuum),
        ("squeezed", PhotonState::squeezed(1.0, 0.0)?),
        ("thermal", PhotonState::thermal(0.5)?),
    ] {
        let res = coherence_functional(&st, &path, &mode)?;
        println!(
            "{label:<10} {:>12.6} {:>14.6e} {:>14.6e} {:>18.15}",
            res.g_state, res.wr, res.w_total_mode, res.contrast_factor
        );
        assert!(res.w_total_mode <= 0.0);
    }

    // The overlap vanishes where ω̄T hits a zero of j₂, decoupling the mode.
    let dark = ModeSpec::dimensionless(5.76345919689455, 1.0)?;
    let res = coherence_functional(&PhotonState::squeezed(2.0, 0.0)?, &path, &dark)?;
    println!("ω̄T at first j₂ zero: W_total = {:.3e}", res.w_total_mode);
    assert!(res.w_total_mode.abs() < 1e-18);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
