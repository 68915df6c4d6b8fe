//! Second moments and the renormalized two-point function of the excited
//! mode for squeezed, thermal and vacuum states.

use recoherence_lab::photon_state::{renormalized_correlator, second_moments, ModeSpec, PhotonState};
use recoherence_lab::Result;

pub fn run() -> Result<()> {
    let mode = ModeSpec::new(1.0, 1.0)?;
    let states = [
        PhotonState::Vacuum,
        PhotonState::squeezed(1.0, 0.0)?,
        PhotonState::squeezed(1.0, std::f64::consts::PI)?,
        PhotonState::thermal(1.0)?,
    ];
    println!("{:<10} {:>10} {:>10} {:>10} {:>14}", "state", "Re<aa>", "Im<aa>", "<a+a>", "D_R(0, 0)");
    for st in &states {
        let m = second_moments(st);
        let d = renormalized_correlator(st, &mode, 0.0, 0.0)?;
        println!("{:<10} {:>10.6} {:>10.6} {:>10.6} {:>14.10}", st.kind(), m.aa.re, m.aa.im + 0.0, m.occupation, d);
    }

    // Squeezing along θ = 0 pushes the equal-time fluctuations below vacuum.
    let d = renormalized_correlator(&states[1], &mode, 0.0, 0.0)?;
    assert!((d + 0.43233235838169365).abs() < 1e-12);

    // A classical field has no second-moment description here.
    assert!(renormalized_correlator(&PhotonState::classical(1.0, 0.0)?, &mode, 0.0, 0.0).is_err());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
