//! Two-path electron trajectories and the closed contour they form.
//!
//! Both branches follow the quartic profile
//!
//! ```text
//! z(t) = ±(R/T⁴)·[(t − t₀ − T)² − T²]²,   t ∈ [t₀, t₀ + 2T]
//! ```
//!
//! leaving the source at `z = 0`, separating to `±R` at mid-flight and
//! recombining at `t₀ + 2T`. The closed contour is the upper branch minus
//! the lower branch, both traversed forward in time.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Peak speed in units of `R/T`: `8/(3√3)`.
pub const PEAK_SPEED_FACTOR: f64 = 1.539_600_717_839_002;

/// Peak speed at or above which the non-relativistic treatment is flagged.
pub const RELATIVISTIC_WARNING_SPEED: f64 = 0.1;

/// Peak speed at or above which a path is rejected outright.
pub const RELATIVISTIC_LIMIT_SPEED: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Upper,
    Lower,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Upper => 1.0,
            Branch::Lower => -1.0,
        }
    }
}

/// The pair of mirror-symmetric electron paths.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathFamily {
    /// Maximum half-separation `R` reached at mid-flight.
    separation: f64,
    /// Half the flight time, `T`.
    half_flight: f64,
    /// Emission time `t₀`.
    emission_time: f64,
}

/// Non-relativistic validity of a path family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PathValidity {
    pub peak_speed: f64,
    /// Set when `peak_speed ≥ 0.1`.
    pub relativistic_warning: bool,
}

impl PathFamily {
    pub fn new(separation: f64, half_flight: f64, emission_time: f64) -> Result<Self> {
        if !(separation.is_finite() && separation > 0.0) {
            return Err(Error::Domain(format!("path separation R must be > 0, got {separation}")));
        }
        if !(half_flight.is_finite() && half_flight > 0.0) {
            return Err(Error::Domain(format!("half flight time T must be > 0, got {half_flight}")));
        }
        if !emission_time.is_finite() {
            return Err(Error::Domain(format!("emission time must be finite, got {emission_time}")));
        }
        let path = PathFamily { separation, half_flight, emission_time };
        let v = path.peak_speed();
        if v >= RELATIVISTIC_LIMIT_SPEED {
            return Err(Error::Domain(format!(
                "peak speed {v} ≥ c (R/T = {}); paths must be non-relativistic",
                separation / half_flight
            )));
        }
        Ok(path)
    }

    /// Path family in units where the half flight time is 1.
    pub fn dimensionless(r_over_t: f64, t0_over_t: f64) -> Result<Self> {
        Self::new(r_over_t, 1.0, t0_over_t)
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    pub fn half_flight(&self) -> f64 {
        self.half_flight
    }

    pub fn emission_time(&self) -> f64 {
        self.emission_time
    }

    pub fn end_time(&self) -> f64 {
        self.emission_time + 2.0 * self.half_flight
    }

    pub fn r_over_t(&self) -> f64 {
        self.separation / self.half_flight
    }

    /// Same geometry, different emission time.
    pub fn with_emission_time(&self, emission_time: f64) -> Result<Self> {
        Self::new(self.separation, self.half_flight, emission_time)
    }

    pub fn peak_speed(&self) -> f64 {
        PEAK_SPEED_FACTOR * self.r_over_t()
    }

    pub fn validity(&self) -> PathValidity {
        let peak_speed = self.peak_speed();
        PathValidity { peak_speed, relativistic_warning: peak_speed >= RELATIVISTIC_WARNING_SPEED }
    }

    fn check_time(&self, t: f64) -> Result<()> {
        if t >= self.emission_time && t <= self.end_time() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "time {t} outside flight interval [{}, {}]",
                self.emission_time,
                self.end_time()
            )))
        }
    }

    /// Transverse displacement of one branch at time `t`.
    pub fn position(&self, t: f64, branch: Branch) -> Result<f64> {
        self.check_time(t)?;
        Ok(branch.sign() * self.position_unchecked(t))
    }

    /// Transverse velocity of one branch at time `t`.
    pub fn velocity(&self, t: f64, branch: Branch) -> Result<f64> {
        self.check_time(t)?;
        Ok(branch.sign() * self.velocity_unchecked(t))
    }

    /// Upper-branch position; callers guarantee `t` lies in the flight interval.
    pub(crate) fn position_unchecked(&self, t: f64) -> f64 {
        let tt = self.half_flight;
        let s = t - self.emission_time - tt;
        let q = s * s - tt * tt;
        self.separation / tt.powi(4) * q * q
    }

    /// Upper-branch velocity; callers guarantee `t` lies in the flight interval.
    pub(crate) fn velocity_unchecked(&self, t: f64) -> f64 {
        let tt = self.half_flight;
        let s = t - self.emission_time - tt;
        4.0 * self.separation / tt.powi(4) * s * (s * s - tt * tt)
    }
}

/// Both branches evaluated at a common time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContourSample {
    pub t: f64,
    pub z_upper: f64,
    pub z_lower: f64,
    pub zdot_upper: f64,
    pub zdot_lower: f64,
}

/// Evenly spaced samples over the full flight, endpoints included.
pub fn sample_contour(path: &PathFamily, n_points: usize) -> Result<Vec<ContourSample>> {
    if n_points < 2 {
        return Err(Error::Argument(format!("contour sampling needs at least 2 points, got {n_points}")));
    }
    let span = 2.0 * path.half_flight;
    let last = (n_points - 1) as f64;
    Ok((0..n_points)
        .map(|k| {
            let t = if k + 1 == n_points {
                path.end_time()
            } else {
                path.emission_time + span * (k as f64 / last)
            };
            let z = path.position_unchecked(t);
            let zdot = path.velocity_unchecked(t);
            ContourSample { t, z_upper: z, z_lower: -z, zdot_upper: zdot, zdot_lower: -zdot }
        })
        .collect())
}
