//! Recompute W_R by direct double quadrature over the closed contour and
//! compare with the closed form on random parameter tuples.

use recoherence_lab::oracle::{compare_squeezed, random_tuples, relative_spread, QuadratureSpec};
use recoherence_lab::Result;

pub fn run() -> Result<()> {
    let spec = QuadratureSpec::default();
    let seed = 11;
    let mut ratios = Vec::new();
    println!("{:>6} {:>6} {:>7} {:>14} {:>14} {:>8}", "r", "ω̄T", "t0/T", "numeric W_R", "closed W_R", "panels");
    for t in random_tuples(8, 1.0, seed)? {
        let rec = compare_squeezed(&t.state, &t.path, &t.mode, &spec, seed)?;
        println!(
            "{:>6.3} {:>6.3} {:>7.3} {:>14.6e} {:>14.6e} {:>8}",
            rec.r, rec.omega_bar_t, rec.t0_over_t, rec.numeric_wr, rec.closed_wr, rec.panels
        );
        assert!((rec.vacuum_ratio - 2.0 * rec.closed_g).abs() < 1e-6 * rec.closed_g.abs().max(1e-3));
        ratios.push(rec.ratio);
    }
    let spread = relative_spread(&ratios);
    println!("ratio {:.12}, relative spread {spread:.2e}", ratios[0]);
    assert!(spread < 1e-6);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
