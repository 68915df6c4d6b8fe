//! Sample the two electron paths and report where the non-relativistic
//! treatment starts to break down.

use recoherence_lab::geometry::{sample_contour, Branch, PathFamily};
use recoherence_lab::Result;

pub fn run() -> Result<()> {
    let path = PathFamily::dimensionless(0.05, 0.0)?;
    println!("R/T = {}, peak speed = {:.5} c", path.r_over_t(), path.peak_speed());

    println!("{:>8} {:>12} {:>12}", "t/T", "z_upper", "zdot_upper");
    for s in sample_contour(&path, 9)? {
        println!("{:>8.3} {:>12.6} {:>12.6}", s.t, s.z_upper, s.zdot_upper);
        assert_eq!(s.z_upper, -s.z_lower);
    }
    // Maximum separation sits at mid-flight.
    assert!((path.position(1.0, Branch::Upper)? - 0.05).abs() < 1e-15);

    for r_over_t in [0.05, 0.2, 1.0, 1.5] {
        match PathFamily::dimensionless(r_over_t, 0.0) {
            Ok(p) => {
                let v = p.validity();
                let note = if v.relativistic_warning { "marginal" } else { "ok" };
                println!("R/T = {r_over_t:<4}: v_max = {:.4} c ({note})", v.peak_speed);
            }
            Err(e) => println!("R/T = {r_over_t:<4}: rejected ({e})"),
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
