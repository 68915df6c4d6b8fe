//! Monte Carlo two-path interference with a fluctuating phase.
//!
//! Each electron carries a random Aharonov-Bohm phase `φ`; the screen
//! intensity at screen phase `χ` is `1 + cos(χ + φ)` for equal-amplitude
//! paths. Accumulating many electrons and fitting the fundamental fringe
//! harmonic gives the empirical contrast `|⟨e^{iφ}⟩|`.

use std::f64::consts::PI;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal, Uniform};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Name of the generator used for all sampling, recorded in outputs.
pub const GENERATOR: &str = "ChaCha8Rng";

pub const MIN_SAMPLES: usize = 1000;

/// Distribution of the per-electron phase.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PhaseModel {
    /// Gaussian phase noise with the given mean and variance `⟨φ²⟩ − ⟨φ⟩²`.
    Gaussian { mean_phase: f64, sigma_sq: f64 },
    /// Classical single-mode phase `A·cos(βt₀)` with emission times uniform
    /// over a full period.
    Sinusoidal { amplitude: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FringeExperiment {
    pub n_samples: usize,
    pub phase: PhaseModel,
    pub seed: u64,
    pub n_screen_bins: usize,
}

impl FringeExperiment {
    pub fn gaussian(sigma_sq: f64, mean_phase: f64, n_samples: usize, seed: u64) -> Self {
        FringeExperiment { n_samples, phase: PhaseModel::Gaussian { mean_phase, sigma_sq }, seed, n_screen_bins: 64 }
    }

    pub fn sinusoidal(amplitude: f64, n_samples: usize, seed: u64) -> Self {
        FringeExperiment { n_samples, phase: PhaseModel::Sinusoidal { amplitude }, seed, n_screen_bins: 64 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_samples < MIN_SAMPLES {
            return Err(Error::Argument(format!("fringe experiment needs ≥ {MIN_SAMPLES} samples, got {}", self.n_samples)));
        }
        if self.n_screen_bins < 3 {
            return Err(Error::Argument("at least 3 screen bins are needed to fit a fringe".into()));
        }
        match self.phase {
            PhaseModel::Gaussian { mean_phase, sigma_sq } => {
                if !(sigma_sq.is_finite() && sigma_sq >= 0.0 && mean_phase.is_finite()) {
                    return Err(Error::Domain(format!("invalid Gaussian phase model (σ² = {sigma_sq})")));
                }
            }
            PhaseModel::Sinusoidal { amplitude } => {
                if !amplitude.is_finite() {
                    return Err(Error::Domain("classical amplitude must be finite".into()));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FringeOutcome {
    /// Contrast from the fitted fundamental harmonic.
    pub contrast: f64,
    pub stat_error: f64,
    /// `(max − min)/(max + min)` over the screen bins.
    pub binned_contrast: f64,
    /// Mean intensity per screen bin.
    pub intensities: Vec<f64>,
    pub seed: u64,
    pub generator: &'static str,
}

/// Draw the per-electron phases for an experiment.
pub fn sample_phases(f: &FringeExperiment) -> Result<Vec<f64>> {
    f.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(f.seed);
    let phases = match f.phase {
        PhaseModel::Gaussian { mean_phase, sigma_sq } => {
            let normal = Normal::new(mean_phase, sigma_sq.sqrt()).map_err(|e| Error::Domain(e.to_string()))?;
            (0..f.n_samples).map(|_| normal.sample(&mut rng)).collect()
        }
        PhaseModel::Sinusoidal { amplitude } => {
            let cycle = Uniform::new(0.0, 2.0 * PI).map_err(|e| Error::Domain(e.to_string()))?;
            (0..f.n_samples).map(|_| amplitude * rng.sample(cycle).cos()).collect()
        }
    };
    Ok(phases)
}

/// Simulate the experiment and estimate the fringe contrast.
pub fn fringe_contrast(f: &FringeExperiment) -> Result<FringeOutcome> {
    let phases = sample_phases(f)?;
    let bins = f.n_screen_bins;
    let n = phases.len() as f64;
    let screen: Vec<f64> = (0..bins).map(|k| 2.0 * PI * k as f64 / bins as f64).collect();

    let mut intensities = vec![0.0; bins];
    for &phi in &phases {
        for (acc, &chi) in intensities.iter_mut().zip(&screen) {
            *acc += 1.0 + (chi + phi).cos();
        }
    }
    for v in &mut intensities {
        *v /= n;
    }

    // Least-squares fit of a + b·cos χ + c·sin χ on uniform bins.
    let m = bins as f64;
    let a = intensities.iter().sum::<f64>() / m;
    let b = 2.0 / m * intensities.iter().zip(&screen).map(|(i, c)| i * c.cos()).sum::<f64>();
    let c = 2.0 / m * intensities.iter().zip(&screen).map(|(i, c)| i * c.sin()).sum::<f64>();
    let contrast = (b.hypot(c) / a).clamp(0.0, 1.0);

    let max = intensities.iter().copied().fold(f64::MIN, f64::max);
    let min = intensities.iter().copied().fold(f64::MAX, f64::min);
    let binned_contrast = ((max - min) / (max + min)).clamp(0.0, 1.0);

    // Standard error of the mean projected onto the mean phasor direction.
    let (sum_cos, sum_sin) = phases.iter().fold((0.0, 0.0), |(s, t), p| (s + p.cos(), t + p.sin()));
    let psi = sum_sin.atan2(sum_cos);
    let proj: Vec<f64> = phases.iter().map(|p| (p - psi).cos()).collect();
    let mean = proj.iter().sum::<f64>() / n;
    let var = proj.iter().map(|u| (u - mean).powi(2)).sum::<f64>() / (n - 1.0);
    let stat_error = (var / n).sqrt();

    Ok(FringeOutcome { contrast, stat_error, binned_contrast, intensities, seed: f.seed, generator: GENERATOR })
}
