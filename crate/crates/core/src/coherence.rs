//! Closed-form coherence functionals for a single excited mode.
//!
//! For the quartic path pair and a `z`-polarized plane-wave mode the
//! renormalized coherence functional factorizes into a path overlap `M`
//! and a state factor `g`:
//!
//! ```text
//! W_R = −(8π α_fs / (V ω̄)) · M · g
//! ```
//!
//! with `g = η[μ cos(α + β t₀) + η]` for a squeezed vacuum, `g = n̄` for a
//! thermal state and `g = 0` for the vacuum. The per-mode vacuum term is
//! `W₀ = −(4π α_fs / (V ω̄)) · M`, so `W₀ + W_R = W₀ (1 + 2g)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::PathFamily;
use crate::photon_state::{ClassicalCoherent, ModeSpec, PhotonState, SqueezedVacuum};
use crate::special::bessel_j0;

/// Fine-structure constant.
pub const ALPHA_FS: f64 = 1.0 / 137.035_999;

/// Squared overlap between the contour velocity profile and the mode's
/// time dependence. Independent of the emission time.
pub fn mode_overlap(path: &PathFamily, mode: &ModeSpec) -> f64 {
    let w = mode.omega_bar();
    let t = path.half_flight();
    let x = w * t;
    // For small x the bracket cancels to ~x⁵/15; use the series there.
    let bracket = if x < 1e-2 {
        let x2 = x * x;
        x.powi(5) / 15.0 * (1.0 - x2 / 14.0 * (1.0 - x2 / 36.0))
    } else {
        let (s, c) = x.sin_cos();
        (x * x - 3.0) * s + 3.0 * x * c
    };
    let pre = 16.0 * path.separation() / (w.powi(4) * t.powi(4));
    (pre * bracket).powi(2)
}

/// Phase offset `α = ω̄T − θ` of the emission-time oscillation.
pub fn phase_alpha(sq: &SqueezedVacuum, path: &PathFamily, mode: &ModeSpec) -> f64 {
    mode.omega_bar() * path.half_flight() - sq.theta
}

/// Angular rate `β = 2ω̄` of the emission-time oscillation.
pub fn phase_beta(mode: &ModeSpec) -> f64 {
    2.0 * mode.omega_bar()
}

/// Squeeze phase as seen by [`crate::photon_state::renormalized_correlator`],
/// whose phase reference is `t = 0`. The closed form refers `θ` to the
/// contour so that its phase constant is `ω̄T − θ`; integrating the
/// correlator directly yields `2ω̄T − θ_lab`.
pub fn lab_frame_theta(sq: &SqueezedVacuum, path: &PathFamily, mode: &ModeSpec) -> f64 {
    (sq.theta + mode.omega_bar() * path.half_flight()).rem_euclid(2.0 * PI)
}

/// `g(r, t₀) = η[μ cos(α + β t₀) + η]`.
///
/// Evaluated as `2ημ cos²(φ/2) − η e^{−r}`, which avoids the cancellation
/// between `ημ` and `η²` near the minimum at large `r`.
pub fn g_function(sq: &SqueezedVacuum, path: &PathFamily, mode: &ModeSpec) -> f64 {
    let phase = phase_alpha(sq, path, mode) + phase_beta(mode) * path.emission_time();
    let (eta, mu) = (sq.eta(), sq.mu());
    let c = (0.5 * phase).cos();
    2.0 * eta * mu * c * c - eta * (-sq.r).exp()
}

/// Minimum of `g` over emission time: `−(1 − e^{−2r})/2`.
pub fn g_min(r: f64) -> f64 {
    -0.5 * (-(-2.0 * r).exp_m1())
}

/// Half-width in phase of the region `g < 0`, `arccos(tanh r)`. Equals `ω̄Δt`.
pub fn window_phase_width(r: f64) -> f64 {
    // arccos(tanh r) = 2 atan(e^{−r}), which keeps precision at large r.
    2.0 * (-r).exp().atan()
}

/// Average of `g` over one recoherence window: `sinh²r − sinh r / arccos(tanh r)`.
pub fn g_avg(r: f64) -> f64 {
    let u = (-r).exp();
    if u > 0.5 {
        let s = r.sinh();
        return s * s - s / window_phase_width(r);
    }
    // With S = atan(u)/u and q = (S − 1)/u², g̃ = (1 − u²)(q − S)/(4S).
    // Both terms grow like e^{2r}, so the direct form loses digits here.
    let u2 = u * u;
    let mut q = 0.0;
    let mut term = -1.0;
    for k in 1..=60 {
        q += term / (2 * k + 1) as f64;
        term *= -u2;
    }
    let s = 1.0 + u2 * q;
    (1.0 - u2) * (q - s) / (4.0 * s)
}

/// `8π α_fs / (V ω̄)`
pub fn coupling(mode: &ModeSpec) -> f64 {
    8.0 * PI * ALPHA_FS / (mode.volume() * mode.omega_bar())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoherenceResult {
    /// Path overlap `M`.
    pub overlap: f64,
    /// State factor entering `W_R` (`g`, `n̄` or 0).
    pub g_state: f64,
    pub w0_mode: f64,
    pub wr: f64,
    pub w_total_mode: f64,
    /// Contrast multiplier `Γ = exp(W₀ + W_R)`.
    pub contrast_factor: f64,
}

/// Evaluate `W₀`, `W_R`, their sum and the contrast factor.
pub fn coherence_functional(state: &PhotonState, path: &PathFamily, mode: &ModeSpec) -> Result<CoherenceResult> {
    let g_state = match state {
        PhotonState::Vacuum => 0.0,
        PhotonState::Squeezed(sq) => g_function(sq, path, mode),
        PhotonState::Thermal { nbar } => *nbar,
        PhotonState::Classical(_) => {
            return Err(Error::UnsupportedState(
                "classical fields shift the phase; use classical_averaged_contrast",
            ))
        }
    };
    let overlap = mode_overlap(path, mode);
    let k = coupling(mode);
    let w0_mode = -0.5 * k * overlap;
    let wr = if g_state == 0.0 { 0.0 } else { -k * overlap * g_state };
    let w_total_mode = w0_mode + wr;
    Ok(CoherenceResult { overlap, g_state, w0_mode, wr, w_total_mode, contrast_factor: w_total_mode.exp() })
}

/// Emission-time interval over which `g < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RecoherenceWindow {
    pub t_i: f64,
    pub t_f: f64,
    pub delta_t: f64,
    pub g_min: f64,
    pub g_avg: f64,
}

fn window_for_cycle(sq: &SqueezedVacuum, path: &PathFamily, mode: &ModeSpec, cycle: f64) -> RecoherenceWindow {
    let beta = phase_beta(mode);
    let alpha = phase_alpha(sq, path, mode);
    let a = window_phase_width(sq.r);
    let centre = (PI + 2.0 * PI * cycle - alpha) / beta;
    let half = a / beta;
    RecoherenceWindow {
        t_i: centre - half,
        t_f: centre + half,
        delta_t: a / mode.omega_bar(),
        g_min: g_min(sq.r),
        g_avg: g_avg(sq.r),
    }
}

/// Earliest window with `t_i ≥ 0`, or `None` when `r = 0` (`g ≡ 0`).
pub fn recoherence_window(sq: &SqueezedVacuum, path: &PathFamily, mode: &ModeSpec) -> Option<RecoherenceWindow> {
    if sq.r == 0.0 {
        return None;
    }
    let alpha = phase_alpha(sq, path, mode);
    let a = window_phase_width(sq.r);
    let mut cycle = ((alpha - PI + a) / (2.0 * PI)).ceil();
    let mut w = window_for_cycle(sq, path, mode, cycle);
    while w.t_i < 0.0 {
        cycle += 1.0;
        w = window_for_cycle(sq, path, mode, cycle);
    }
    while cycle > f64::MIN && window_for_cycle(sq, path, mode, cycle - 1.0).t_i >= 0.0 {
        cycle -= 1.0;
        w = window_for_cycle(sq, path, mode, cycle);
    }
    Some(w)
}

/// Every window overlapping `[start, stop]`, in time order.
pub fn recoherence_windows_in(
    sq: &SqueezedVacuum,
    path: &PathFamily,
    mode: &ModeSpec,
    start: f64,
    stop: f64,
) -> Vec<RecoherenceWindow> {
    if sq.r == 0.0 || stop < start {
        return Vec::new();
    }
    let alpha = phase_alpha(sq, path, mode);
    let a = window_phase_width(sq.r);
    let beta = phase_beta(mode);
    // Cycle whose window ends at or after `start`.
    let mut cycle = ((alpha + beta * start - PI - a) / (2.0 * PI)).floor();
    let mut out = Vec::new();
    loop {
        let w = window_for_cycle(sq, path, mode, cycle);
        if w.t_i > stop {
            break;
        }
        if w.t_f >= start {
            out.push(w);
        }
        cycle += 1.0;
    }
    out
}

/// Recoherence magnitude `W̃_R`: `W_R` with `g` replaced by its window average.
pub fn averaged_wr(sq: &SqueezedVacuum, path: &PathFamily, mode: &ModeSpec) -> Result<f64> {
    if sq.r == 0.0 {
        return Err(Error::DegenerateWindow("r = 0 has no recoherence window".into()));
    }
    Ok(-coupling(mode) * mode_overlap(path, mode) * g_avg(sq.r))
}

/// Peak Aharonov-Bohm phase `A·cos(α′ + βt₀)` imprinted by a classical mode
/// on electrons emitted at the path's emission time.
pub fn classical_phase(field: &ClassicalCoherent, path: &PathFamily, mode: &ModeSpec) -> f64 {
    let alpha = mode.omega_bar() * path.half_flight() - field.phase;
    field.amplitude * (alpha + phase_beta(mode) * path.emission_time()).cos()
}

/// Contrast multiplier after averaging the classical phase uniformly over
/// emission time: `|J₀(A)|`.
pub fn classical_averaged_contrast(field: &ClassicalCoherent) -> f64 {
    bessel_j0(field.amplitude).abs()
}
