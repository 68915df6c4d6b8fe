//! Order-of-magnitude recoherence estimates for experimental feasibility.
//!
//! These are kept as literal formulas with their published coefficients.
//! They assume the window-averaged state factor sits at its bound and are
//! not replaced by the exact closed forms; [`cavity_cross_check`] reports
//! how the two compare.

use serde::{Deserialize, Serialize};

use crate::coherence::{coupling, mode_overlap};
use crate::error::{Error, Result};
use crate::geometry::PathFamily;
use crate::photon_state::ModeSpec;

/// Coefficient of the single-mode box estimate.
pub const SINGLE_MODE_COEFFICIENT: f64 = 8e-4;
/// Coefficient after setting `V ≈ λ³` and `R ≈ λ`.
pub const CAVITY_COEFFICIENT: f64 = 1e-3;
/// Coefficient of the finite-bandwidth estimate.
pub const BANDWIDTH_COEFFICIENT: f64 = 1e-2;

/// Factors above this are no longer "small compared to unity".
pub const SMALLNESS_THRESHOLD: f64 = 0.1;

/// An estimate together with any violated validity assumptions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Estimate {
    pub value: f64,
    pub warnings: Vec<String>,
}

impl Estimate {
    pub fn is_valid(&self) -> bool {
        self.warnings.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CavityEstimateInput {
    /// `λ³/V`
    pub lambda3_over_v: f64,
    pub r_over_t: f64,
    pub lambda_over_t: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BandwidthSpec {
    /// `Δω/ω̄`
    pub delta_omega_over_omega: f64,
    /// Solid angle `ΔΩ` in steradians.
    pub delta_solid_angle: f64,
}

/// `8×10⁻⁴ · (λ³/V) · (R/T)² · (λ/T)²`
pub fn single_mode_estimate(i: &CavityEstimateInput) -> Estimate {
    let mut warnings = Vec::new();
    if !(i.lambda3_over_v > 0.0) {
        warnings.push(format!("λ³/V = {} is not positive", i.lambda3_over_v));
    }
    if !(i.r_over_t > 0.0 && i.r_over_t < 1.0) {
        warnings.push(format!("R/T = {} outside (0, 1): motion is not non-relativistic", i.r_over_t));
    }
    if !(i.lambda_over_t > 0.0) {
        warnings.push(format!("λ/T = {} is not positive", i.lambda_over_t));
    }
    let value = SINGLE_MODE_COEFFICIENT * i.lambda3_over_v * i.r_over_t.powi(2) * i.lambda_over_t.powi(2);
    Estimate { value, warnings }
}

/// `10⁻³ · (R/T)⁴` for the lowest cavity mode with path separation of the
/// order of the cavity size.
pub fn cavity_estimate(r_over_t: f64) -> Result<f64> {
    if !(r_over_t > 0.0 && r_over_t <= 1.0) {
        return Err(Error::Argument(format!("R/T must lie in (0, 1], got {r_over_t}")));
    }
    Ok(CAVITY_COEFFICIENT * r_over_t.powi(4))
}

/// `10⁻² · (R/T)² · (Δω/ω̄) · ΔΩ` for a band of excited modes.
pub fn bandwidth_estimate(r_over_t: f64, b: &BandwidthSpec) -> Estimate {
    let mut warnings = Vec::new();
    let small = |name: &str, v: f64, warnings: &mut Vec<String>| {
        if v > SMALLNESS_THRESHOLD {
            warnings.push(format!("{name} = {v} is not small compared to unity"));
        }
    };
    if !(0.0..1.0).contains(&r_over_t) {
        warnings.push(format!("R/T = {r_over_t} outside [0, 1)"));
    }
    small("R/T", r_over_t, &mut warnings);
    if !(b.delta_omega_over_omega > 0.0 && b.delta_omega_over_omega < 1.0) {
        warnings.push(format!("Δω/ω̄ = {} outside (0, 1)", b.delta_omega_over_omega));
    }
    small("Δω/ω̄", b.delta_omega_over_omega, &mut warnings);
    if !(b.delta_solid_angle > 0.0 && b.delta_solid_angle <= 4.0 * std::f64::consts::PI) {
        warnings.push(format!("ΔΩ = {} outside (0, 4π]", b.delta_solid_angle));
    }
    small("ΔΩ", b.delta_solid_angle, &mut warnings);
    let value = BANDWIDTH_COEFFICIENT * r_over_t.powi(2) * b.delta_omega_over_omega * b.delta_solid_angle;
    Estimate { value, warnings }
}

/// Exact single-mode recoherence at the window-average bound versus the
/// cavity estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CavityCrossCheck {
    pub r_over_t: f64,
    /// `ω̄T` maximizing the exact value.
    pub best_omega_bar_t: f64,
    pub exact: f64,
    pub estimate: f64,
    /// `estimate / exact`
    pub ratio: f64,
}

/// Maximize `(8πα_fs/(Vω̄))·M/3` over `ω̄T` with `V = λ³`, and compare with
/// [`cavity_estimate`]. No agreement is implied; the ratio is informational.
pub fn cavity_cross_check(r_over_t: f64) -> Result<CavityCrossCheck> {
    let estimate = cavity_estimate(r_over_t)?;
    let path = PathFamily::dimensionless(r_over_t, 0.0)?;
    let exact_at = |x: f64| -> Result<f64> {
        let mode = ModeSpec::dimensionless(x, 1.0)?;
        Ok(coupling(&mode) * mode_overlap(&path, &mode) / 3.0)
    };
    let (lo, hi, n) = (0.05, 20.0, 4000);
    let h = (hi - lo) / n as f64;
    let mut best = (lo, exact_at(lo)?);
    for k in 1..=n {
        let x = lo + h * k as f64;
        let v = exact_at(x)?;
        if v > best.1 {
            best = (x, v);
        }
    }
    // Golden-section refinement inside the bracketing cells.
    let (mut a, mut b) = ((best.0 - h).max(lo), (best.0 + h).min(hi));
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..80 {
        let c = b - phi * (b - a);
        let d = a + phi * (b - a);
        if exact_at(c)? > exact_at(d)? {
            b = d;
        } else {
            a = c;
        }
    }
    let x = 0.5 * (a + b);
    let exact = exact_at(x)?.max(best.1);
    Ok(CavityCrossCheck { r_over_t, best_omega_bar_t: x, exact, estimate, ratio: estimate / exact })
}
