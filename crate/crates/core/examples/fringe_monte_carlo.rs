//! Simulate detector hits on the interference screen with a random phase
//! and fit the fringe contrast.

use recoherence_lab::oracle::{fringe_contrast, FringeExperiment};
use recoherence_lab::Result;

pub fn run() -> Result<()> {
    println!("{:>6} {:>10} {:>10} {:>10}", "σ²", "fitted", "±", "e^(-σ²/2)");
    for sigma_sq in [0.0, 0.1, 0.5, 1.0, 2.0] {
        let out = fringe_contrast(&FringeExperiment::gaussian(sigma_sq, 0.0, 50_000, 3))?;
        let expected = (-0.5 * sigma_sq).exp();
        println!("{sigma_sq:>6} {:>10.5} {:>10.5} {:>10.5}", out.contrast, out.stat_error, expected);
        assert!((out.contrast - expected).abs() < 4.0 * out.stat_error.max(1e-12));
    }

    // Same seed, same hits.
    let a = fringe_contrast(&FringeExperiment::gaussian(0.5, 0.0, 2_000, 9))?;
    let b = fringe_contrast(&FringeExperiment::gaussian(0.5, 0.0, 2_000, 9))?;
    assert_eq!(a, b);
    println!("generator {}, seed {}", a.generator, a.seed);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
