//! Special functions and a bracketing root finder.

use crate::error::{Error, Result};

/// Ordinary Bessel function of the first kind, order zero.
pub fn bessel_j0(x: f64) -> f64 {
    libm::j0(x)
}

/// Spherical Bessel function `j₂(x)`.
pub fn spherical_j2(x: f64) -> f64 {
    if x.abs() < 1e-3 {
        // x²/15 − x⁴/210 + x⁶/7560
        let x2 = x * x;
        return x2 / 15.0 * (1.0 - x2 / 14.0 * (1.0 - x2 / 36.0));
    }
    let (s, c) = x.sin_cos();
    (3.0 / (x * x * x) - 1.0 / x) * s - 3.0 * c / (x * x)
}

/// Bisection on a sign-changing bracket, to absolute tolerance `tol` in `x`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Argument(format!("no sign change on [{lo}, {hi}]")));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Sign changes of `f` on `[a, b]` scanned with `n` steps, each refined by bisection.
pub fn find_roots<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize, tol: f64) -> Vec<f64> {
    let h = (b - a) / n as f64;
    let mut roots = Vec::new();
    let mut x0 = a;
    let mut f0 = f(x0);
    for k in 1..=n {
        let x1 = a + h * k as f64;
        let f1 = f(x1);
        if f0 != 0.0 && f1 != 0.0 && f0.signum() != f1.signum() {
            if let Ok(root) = bisect(&f, x0, x1, tol) {
                roots.push(root);
            }
        } else if f1 == 0.0 {
            roots.push(x1);
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}
