//! A classical field shifts the relative phase deterministically; averaging
//! over emission times washes the fringes out to |J₀(A)|.

use recoherence_lab::coherence::{classical_averaged_contrast, classical_phase};
use recoherence_lab::geometry::PathFamily;
use recoherence_lab::oracle::{fringe_contrast, FringeExperiment};
use recoherence_lab::photon_state::{ClassicalCoherent, ModeSpec};
use recoherence_lab::Result;

pub fn run() -> Result<()> {
    let mode = ModeSpec::dimensionless(3.0, 1.0)?;
    let field = ClassicalCoherent { amplitude: 1.0, phase: 0.0 };
    for t0 in [0.0, 0.25, 0.5] {
        let path = PathFamily::dimensionless(0.05, t0)?;
        println!("t0/T = {t0}: phase shift {:+.6}", classical_phase(&field, &path, &mode));
    }

    println!("{:>5} {:>10} {:>10}", "A", "|J0(A)|", "simulated");
    for a in [0.5, 1.0, 2.404825557695773, 4.0] {
        let f = ClassicalCoherent { amplitude: a, phase: 0.0 };
        let exact = classical_averaged_contrast(&f);
        let mc = fringe_contrast(&FringeExperiment::sinusoidal(a, 50_000, 5))?;
        println!("{a:>5.3} {exact:>10.6} {:>10.6}", mc.contrast);
        assert!((mc.contrast - exact).abs() < 4.0 * mc.stat_error + 1e-3);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
