//! Generate the figure tables and check their qualitative shape.

use recoherence_lab::figures::{fig2_curves, fig2_minimum, fig2_shape, fig3, fig3_shape, Fig2Spec};
use recoherence_lab::sweep::GridSpec;
use recoherence_lab::Result;

pub fn run() -> Result<()> {
    let spec = Fig2Spec { points_per_period: 50, ..Fig2Spec::default() };
    let curves = fig2_curves(&spec)?;
    let minimum = fig2_minimum(&GridSpec::parse("lin:0.05:3:30")?.values());
    let f3 = fig3(&GridSpec::parse("log:0.05:6:60")?.values())?;

    let checks = fig2_shape(&curves, &minimum, spec.points_per_period)?.into_iter().chain(fig3_shape(&f3)?);
    for c in checks {
        println!("{} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
        assert!(c.passed, "{}", c.detail);
    }

    // First lines of the fig3 table as it would be written to disk.
    for line in f3.to_csv().lines().take(4) {
        println!("{line}");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
