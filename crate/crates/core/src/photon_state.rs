//! Gaussian states of the single excited photon mode.
//!
//! The mode is a periodic-box plane wave travelling along `y` with linear
//! polarization along `z`. The interferometer sits at `y = 0`, so the mode
//! function enters only through its time dependence.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Unit vectors of the excited mode. Fixed by the path geometry: the
/// electrons move along `z`, the wave propagates along `y`.
pub const PROPAGATION_AXIS: [f64; 3] = [0.0, 1.0, 0.0];
pub const POLARIZATION_AXIS: [f64; 3] = [0.0, 0.0, 1.0];

/// The single excited plane-wave mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeSpec {
    omega_bar: f64,
    volume: f64,
}

impl ModeSpec {
    pub fn new(omega_bar: f64, volume: f64) -> Result<Self> {
        if !(omega_bar.is_finite() && omega_bar > 0.0) {
            return Err(Error::Domain(format!("mode frequency must be > 0, got {omega_bar}")));
        }
        if !(volume.is_finite() && volume > 0.0) {
            return Err(Error::Domain(format!("quantization volume must be > 0, got {volume}")));
        }
        Ok(ModeSpec { omega_bar, volume })
    }

    /// Mode from `ω̄T` and `V/λ³`, with `T = 1`.
    pub fn dimensionless(omega_bar_t: f64, v_over_lambda3: f64) -> Result<Self> {
        if !(omega_bar_t.is_finite() && omega_bar_t > 0.0) {
            return Err(Error::Domain(format!("omega_bar_T must be > 0, got {omega_bar_t}")));
        }
        let lambda = 2.0 * PI / omega_bar_t;
        Self::new(omega_bar_t, v_over_lambda3 * lambda.powi(3))
    }

    pub fn omega_bar(&self) -> f64 {
        self.omega_bar
    }

    pub fn volume(&self) -> f64 {
        self.volume
    }

    pub fn wavelength(&self) -> f64 {
        2.0 * PI / self.omega_bar
    }

    pub fn propagation_axis(&self) -> [f64; 3] {
        PROPAGATION_AXIS
    }

    pub fn polarization_axis(&self) -> [f64; 3] {
        POLARIZATION_AXIS
    }
}

/// Squeeze parameter `ζ = r·e^{iθ}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SqueezedVacuum {
    pub r: f64,
    pub theta: f64,
}

impl SqueezedVacuum {
    pub fn new(r: f64, theta: f64) -> Result<Self> {
        if !(r.is_finite() && r >= 0.0) {
            return Err(Error::Domain(format!("squeeze magnitude r must be ≥ 0, got {r}")));
        }
        if !theta.is_finite() {
            return Err(Error::Domain(format!("squeeze phase must be finite, got {theta}")));
        }
        Ok(SqueezedVacuum { r, theta: theta.rem_euclid(2.0 * PI) })
    }

    /// `μ = cosh r`
    pub fn mu(&self) -> f64 {
        self.r.cosh()
    }

    /// `η = sinh r`
    pub fn eta(&self) -> f64 {
        self.r.sinh()
    }
}

/// Classical single-mode field. `amplitude` is already expressed as the
/// peak Aharonov-Bohm phase it imprints on the contour (radians).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicalCoherent {
    pub amplitude: f64,
    pub phase: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PhotonState {
    Vacuum,
    Squeezed(SqueezedVacuum),
    Thermal { nbar: f64 },
    Classical(ClassicalCoherent),
}

impl PhotonState {
    pub fn squeezed(r: f64, theta: f64) -> Result<Self> {
        SqueezedVacuum::new(r, theta).map(PhotonState::Squeezed)
    }

    pub fn thermal(nbar: f64) -> Result<Self> {
        if !(nbar.is_finite() && nbar >= 0.0) {
            return Err(Error::Domain(format!("thermal occupation must be ≥ 0, got {nbar}")));
        }
        Ok(PhotonState::Thermal { nbar })
    }

    pub fn classical(amplitude: f64, phase: f64) -> Result<Self> {
        if !(amplitude.is_finite() && phase.is_finite()) {
            return Err(Error::Domain("classical field amplitude and phase must be finite".into()));
        }
        Ok(PhotonState::Classical(ClassicalCoherent { amplitude, phase }))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            PhotonState::Vacuum => "vacuum",
            PhotonState::Squeezed(_) => "squeezed",
            PhotonState::Thermal { .. } => "thermal",
            PhotonState::Classical(_) => "classical",
        }
    }
}

/// Normally ordered second moments `(⟨a²⟩, ⟨a†a⟩)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondMoments {
    pub aa: Complex64,
    pub occupation: f64,
}

/// Second moments of a Gaussian state. The squeezed convention is
/// `⟨a²⟩ = −e^{iθ}·sinh r·cosh r`, `⟨a†a⟩ = sinh²r`.
///
/// A classical coherent field is a displacement, not a fluctuation; its
/// connected second moments vanish.
pub fn second_moments(state: &PhotonState) -> SecondMoments {
    match *state {
        PhotonState::Vacuum | PhotonState::Classical(_) => {
            SecondMoments { aa: Complex64::new(0.0, 0.0), occupation: 0.0 }
        }
        PhotonState::Squeezed(sq) => {
            let (eta, mu) = (sq.eta(), sq.mu());
            SecondMoments { aa: -Complex64::from_polar(eta * mu, sq.theta), occupation: eta * eta }
        }
        PhotonState::Thermal { nbar } => SecondMoments { aa: Complex64::new(0.0, 0.0), occupation: nbar },
    }
}

/// Vacuum-subtracted, symmetrized two-time correlator of the polarization
/// component of the vector potential at the interferometer origin:
///
/// `(1/(2ω̄V))·[2·Re(⟨a²⟩·e^{−iω̄(t+t′)}) + 2·⟨a†a⟩·cos(ω̄(t−t′))]`
pub fn renormalized_correlator(state: &PhotonState, mode: &ModeSpec, t: f64, t_prime: f64) -> Result<f64> {
    if let PhotonState::Classical(_) = state {
        return Err(Error::UnsupportedState("a classical field has no fluctuation correlator"));
    }
    Ok(correlator_from_moments(&second_moments(state), mode, t, t_prime))
}

pub(crate) fn correlator_from_moments(m: &SecondMoments, mode: &ModeSpec, t: f64, t_prime: f64) -> f64 {
    let w = mode.omega_bar;
    let anomalous = (m.aa * Complex64::from_polar(1.0, -w * (t + t_prime))).re;
    let normal = m.occupation * (w * (t - t_prime)).cos();
    (anomalous + normal) / (w * mode.volume)
}

/// Symmetrized correlator of the same mode in its ground state,
/// `(1/(2ω̄V))·cos(ω̄(t−t′))`.
pub fn vacuum_correlator(mode: &ModeSpec, t: f64, t_prime: f64) -> f64 {
    (mode.omega_bar * (t - t_prime)).cos() / (2.0 * mode.omega_bar * mode.volume)
}
