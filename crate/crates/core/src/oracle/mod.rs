//! Independent numerical checks of the closed forms.

pub mod fringe;
pub mod quadrature;

use serde::Serialize;

pub use fringe::{fringe_contrast, FringeExperiment, FringeOutcome, PhaseModel, GENERATOR, MIN_SAMPLES};
pub use quadrature::{numeric_w0_mode, numeric_wr, QuadratureOutcome, QuadratureSpec};

use crate::coherence::{coherence_functional, g_function, lab_frame_theta};
use crate::error::Result;
use crate::geometry::PathFamily;
use crate::photon_state::{ModeSpec, PhotonState, SqueezedVacuum};

/// One quadrature-vs-closed-form comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleRecord {
    pub r: f64,
    pub theta: f64,
    pub t0_over_t: f64,
    pub omega_bar_t: f64,
    pub r_over_t: f64,
    pub v_over_lambda3: f64,
    pub numeric_wr: f64,
    pub closed_wr: f64,
    /// `numeric_wr / closed_wr`
    pub ratio: f64,
    pub numeric_w0_mode: f64,
    pub closed_g: f64,
    /// `numeric_wr / numeric_w0_mode`, expected to equal `2g`.
    pub vacuum_ratio: f64,
    pub panels: usize,
    pub seed: u64,
}

/// Compare quadrature and closed form for a squeezed state on a
/// dimensionless parameter tuple (`T = 1`).
pub fn compare_squeezed(
    sq: &SqueezedVacuum,
    path: &PathFamily,
    mode: &ModeSpec,
    spec: &QuadratureSpec,
    seed: u64,
) -> Result<OracleRecord> {
    let closed = coherence_functional(&PhotonState::Squeezed(*sq), path, mode)?;
    let lab = PhotonState::squeezed(sq.r, lab_frame_theta(sq, path, mode))?;
    let num = numeric_wr(&lab, path, mode, spec)?;
    let w0 = numeric_w0_mode(path, mode, spec)?;
    let t = path.half_flight();
    Ok(OracleRecord {
        r: sq.r,
        theta: sq.theta,
        t0_over_t: path.emission_time() / t,
        omega_bar_t: mode.omega_bar() * t,
        r_over_t: path.r_over_t(),
        v_over_lambda3: mode.volume() / mode.wavelength().powi(3),
        numeric_wr: num.value,
        closed_wr: closed.wr,
        ratio: num.value / closed.wr,
        numeric_w0_mode: w0.value,
        closed_g: g_function(sq, path, mode),
        vacuum_ratio: num.value / w0.value,
        panels: num.panels.max(w0.panels),
        seed,
    })
}

/// Parameter box sampled by [`random_tuples`].
pub const TUPLE_R: (f64, f64) = (0.1, 3.0);
pub const TUPLE_T0_OVER_T: (f64, f64) = (0.0, 3.0);
pub const TUPLE_OMEGA_BAR_T: (f64, f64) = (0.5, 6.0);
pub const TUPLE_R_OVER_T: (f64, f64) = (0.01, 0.1);

/// A squeezed-state parameter tuple in units of `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleTuple {
    pub state: SqueezedVacuum,
    pub path: PathFamily,
    pub mode: ModeSpec,
}

/// Seeded uniform draws of `(r, θ, t₀/T, ω̄T, R/T)` over the oracle box.
pub fn random_tuples(n: usize, v_over_lambda3: f64, seed: u64) -> Result<Vec<OracleTuple>> {
    use rand::{RngExt, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |(lo, hi): (f64, f64)| lo + (hi - lo) * rng.random::<f64>();
    (0..n)
        .map(|_| {
            let r = draw(TUPLE_R);
            let theta = draw((0.0, 2.0 * std::f64::consts::PI));
            let t0 = draw(TUPLE_T0_OVER_T);
            let w = draw(TUPLE_OMEGA_BAR_T);
            let rt = draw(TUPLE_R_OVER_T);
            Ok(OracleTuple {
                state: SqueezedVacuum::new(r, theta)?,
                path: PathFamily::dimensionless(rt, t0)?,
                mode: ModeSpec::dimensionless(w, v_over_lambda3)?,
            })
        })
        .collect()
}

/// Largest relative deviation of the ratios from their mean.
pub fn relative_spread(ratios: &[f64]) -> f64 {
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    ratios.iter().map(|r| ((r - mean) / mean).abs()).fold(0.0, f64::max)
}
