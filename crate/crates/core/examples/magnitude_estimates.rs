//! Order-of-magnitude size of the recoherence effect in a cavity and with a
//! finite-bandwidth squeezed beam.

use recoherence_lab::estimates::{
    bandwidth_estimate, cavity_cross_check, cavity_estimate, single_mode_estimate, BandwidthSpec, CavityEstimateInput,
};
use recoherence_lab::Result;

pub fn run() -> Result<()> {
    let single = single_mode_estimate(&CavityEstimateInput { lambda3_over_v: 1.0, r_over_t: 0.1, lambda_over_t: 0.1 });
    println!("single mode      {:.3e}", single.value);
    println!("cavity (R/T=0.1) {:.3e}", cavity_estimate(0.1)?);

    let beam = BandwidthSpec { delta_omega_over_omega: 0.1, delta_solid_angle: 0.1 };
    println!("bandwidth        {:.3e}", bandwidth_estimate(0.1, &beam).value);

    let loose = bandwidth_estimate(0.5, &BandwidthSpec { delta_omega_over_omega: 0.5, delta_solid_angle: 0.1 });
    for w in &loose.warnings {
        println!("warning: {w}");
    }
    assert!(!loose.is_valid());

    let cross = cavity_cross_check(0.1)?;
    println!(
        "exact single-mode bound {:.3e} at ω̄T = {:.3} (estimate/exact = {:.3})",
        cross.exact, cross.best_omega_bar_t, cross.ratio
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
