//! Direct numerical evaluation of the double contour integral
//!
//! ```text
//! W = −2π α_fs ∮ dz ∮ dz′ D(t, t′)
//! ```
//!
//! with `dz = ż dt` on both branches; the closed contour is the upper branch
//! minus the lower branch, each traversed with `t` increasing. The integral
//! over `[t₀, t₀+2T]²` uses a tensor-product Gauss-Legendre panel rule with
//! panel doubling until successive values agree.

use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coherence::ALPHA_FS;
use crate::error::{Error, Result};
use crate::geometry::PathFamily;
use crate::photon_state::{correlator_from_moments, second_moments, vacuum_correlator, ModeSpec, PhotonState};

/// Panel rule and refinement policy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// Panels used for the first evaluation.
    pub n_panels: usize,
    /// Gauss-Legendre nodes per panel.
    pub nodes_per_panel: usize,
    /// Panel multiplier between refinements.
    pub refinement_factor: usize,
    pub max_panels: usize,
    /// Relative change between refinements accepted as converged.
    pub rel_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { n_panels: 4, nodes_per_panel: 12, refinement_factor: 2, max_panels: 1 << 20, rel_tol: 1e-8 }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_panels == 0 || self.nodes_per_panel == 0 {
            return Err(Error::Argument("quadrature needs at least one panel and one node".into()));
        }
        if self.refinement_factor < 2 {
            return Err(Error::Argument("refinement factor must be ≥ 2".into()));
        }
        if !(self.rel_tol > 0.0) {
            return Err(Error::Argument("relative tolerance must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureOutcome {
    pub value: f64,
    /// Value at the previous refinement level.
    pub previous: f64,
    /// Panels used for `value`.
    pub panels: usize,
}

/// Nodes and `weight · (ż_upper − ż_lower)` factors along the contour.
fn contour_nodes(path: &PathFamily, panels: usize, rule: &GaussLegendre) -> Vec<(f64, f64)> {
    let a = path.emission_time();
    let h = 2.0 * path.half_flight() / panels as f64;
    let mut out = Vec::with_capacity(panels * rule.as_node_weight_pairs().len());
    for p in 0..panels {
        let lo = a + h * p as f64;
        for &(x, w) in rule.as_node_weight_pairs() {
            let t = lo + 0.5 * h * (x + 1.0);
            let zdot = path.velocity_unchecked(t);
            out.push((t, 0.5 * h * w * 2.0 * zdot));
        }
    }
    out
}

/// `(∮∮ dz dz′ K, ∮∮ |dz dz′ K|)` at a fixed panel count.
fn double_sum<K>(nodes: &[(f64, f64)], kernel: &K) -> (f64, f64)
where
    K: Fn(f64, f64) -> f64 + Sync,
{
    let rows: Vec<(f64, f64)> = nodes
        .par_iter()
        .map(|&(t, a)| {
            let mut s = 0.0;
            let mut s_abs = 0.0;
            for &(tp, b) in nodes {
                let v = a * b * kernel(t, tp);
                s += v;
                s_abs += v.abs();
            }
            (s, s_abs)
        })
        .collect();
    rows.iter().fold((0.0, 0.0), |acc, r| (acc.0 + r.0, acc.1 + r.1))
}

fn rule(nodes_per_panel: usize) -> Result<GaussLegendre> {
    let n = NonZeroUsize::new(nodes_per_panel).ok_or_else(|| Error::Argument("zero quadrature nodes".into()))?;
    Ok(GaussLegendre::new(n))
}

/// `∮∮ dz dz′ K(t, t′)` with a fixed number of panels, no refinement.
pub fn contour_double_integral_fixed<K>(path: &PathFamily, panels: usize, nodes_per_panel: usize, kernel: K) -> Result<f64>
where
    K: Fn(f64, f64) -> f64 + Sync,
{
    if panels == 0 {
        return Err(Error::Argument("zero panels".into()));
    }
    let rule = rule(nodes_per_panel)?;
    Ok(double_sum(&contour_nodes(path, panels, &rule), &kernel).0)
}

/// `∮∮ dz dz′ K(t, t′)`, refined until the relative change falls below
/// `spec.rel_tol`. The change is measured against the larger of the value
/// and the integral of `|integrand|`, so identically cancelling integrands
/// converge.
pub fn contour_double_integral<K>(path: &PathFamily, spec: &QuadratureSpec, kernel: K) -> Result<QuadratureOutcome>
where
    K: Fn(f64, f64) -> f64 + Sync,
{
    spec.validate()?;
    let rule = rule(spec.nodes_per_panel)?;
    let mut panels = spec.n_panels;
    let (mut previous, _) = double_sum(&contour_nodes(path, panels, &rule), &kernel);
    loop {
        let next = panels * spec.refinement_factor;
        if next > spec.max_panels {
            return Err(Error::NonConvergence { panels, previous, last: previous });
        }
        let (value, abs_scale) = double_sum(&contour_nodes(path, next, &rule), &kernel);
        let scale = value.abs().max(abs_scale);
        if (value - previous).abs() <= spec.rel_tol * scale {
            return Ok(QuadratureOutcome { value, previous, panels: next });
        }
        if next * spec.refinement_factor > spec.max_panels {
            return Err(Error::NonConvergence { panels: next, previous, last: value });
        }
        previous = value;
        panels = next;
    }
}

/// Renormalized coherence functional by direct quadrature of the
/// state's correlator. The squeeze phase is taken in the correlator's frame
/// (see [`crate::coherence::lab_frame_theta`]).
pub fn numeric_wr(state: &PhotonState, path: &PathFamily, mode: &ModeSpec, spec: &QuadratureSpec) -> Result<QuadratureOutcome> {
    if let PhotonState::Classical(_) = state {
        return Err(Error::UnsupportedState("a classical field has no fluctuation correlator"));
    }
    let moments = second_moments(state);
    let mode = *mode;
    let out = contour_double_integral(path, spec, move |t, tp| correlator_from_moments(&moments, &mode, t, tp))?;
    Ok(scale_outcome(out))
}

/// Vacuum coherence functional of the excited mode alone, by quadrature.
pub fn numeric_w0_mode(path: &PathFamily, mode: &ModeSpec, spec: &QuadratureSpec) -> Result<QuadratureOutcome> {
    let mode = *mode;
    let out = contour_double_integral(path, spec, move |t, tp| vacuum_correlator(&mode, t, tp))?;
    Ok(scale_outcome(out))
}

fn scale_outcome(out: QuadratureOutcome) -> QuadratureOutcome {
    let k = -2.0 * std::f64::consts::PI * ALPHA_FS;
    QuadratureOutcome { value: k * out.value, previous: k * out.previous, panels: out.panels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherence::{coherence_functional, g_function, lab_frame_theta, mode_overlap};
    use crate::photon_state::SqueezedVacuum;

    fn setup() -> (PathFamily, ModeSpec) {
        (PathFamily::new(0.05, 1.0, 0.4).unwrap(), ModeSpec::new(2.7, 0.8).unwrap())
    }

    #[test]
    fn vacuum_state_integrates_to_zero() {
        let (p, m) = setup();
        let out = numeric_wr(&PhotonState::Vacuum, &p, &m, &QuadratureSpec::default()).unwrap();
        assert_eq!(out.value, 0.0);
    }

    #[test]
    fn unit_kernel_vanishes_on_closed_contour() {
        let (p, _) = setup();
        let v = contour_double_integral_fixed(&p, 4, 8, |_, _| 1.0).unwrap();
        assert!(v.abs() < 1e-15);
    }

    #[test]
    fn vacuum_mode_matches_closed_form() {
        let (p, m) = setup();
        let num = numeric_w0_mode(&p, &m, &QuadratureSpec::default()).unwrap();
        let closed = coherence_functional(&PhotonState::Vacuum, &p, &m).unwrap().w0_mode;
        assert!(num.value < 0.0);
        assert!(((num.value - closed) / closed).abs() < 1e-9, "{} vs {closed}", num.value);
    }

    #[test]
    fn squeezed_ratio_to_vacuum_is_twice_g() {
        let (p, m) = setup();
        let sq = SqueezedVacuum::new(0.9, 1.1).unwrap();
        let lab = PhotonState::squeezed(0.9, lab_frame_theta(&sq, &p, &m)).unwrap();
        let spec = QuadratureSpec::default();
        let wr = numeric_wr(&lab, &p, &m, &spec).unwrap().value;
        let w0 = numeric_w0_mode(&p, &m, &spec).unwrap().value;
        let g = g_function(&sq, &p, &m);
        assert!((wr / w0 - 2.0 * g).abs() < 1e-8 * (2.0 * g).abs());
    }

    #[test]
    fn thermal_is_linear_in_occupation() {
        let (p, m) = setup();
        let spec = QuadratureSpec::default();
        let one = numeric_wr(&PhotonState::thermal(1.0).unwrap(), &p, &m, &spec).unwrap().value;
        let n = numeric_wr(&PhotonState::thermal(3.25).unwrap(), &p, &m, &spec).unwrap().value;
        assert!((n / one - 3.25).abs() < 1e-12);
    }

    #[test]
    fn zero_of_overlap_gives_zero_integral() {
        let x = 5.763_459_196_894_55;
        let p = PathFamily::new(0.05, 1.0, 0.0).unwrap();
        let m = ModeSpec::new(x, 1.0).unwrap();
        assert!(mode_overlap(&p, &m) < 1e-25);
        let w0 = numeric_w0_mode(&p, &m, &QuadratureSpec::default()).unwrap();
        assert!(w0.value.abs() < 1e-16, "{}", w0.value);
    }

    #[test]
    fn low_order_rule_converges_at_fourth_order() {
        // Two-point Gauss-Legendre per panel: error ∝ h⁴.
        let (p, m) = setup();
        let closed = coherence_functional(&PhotonState::Vacuum, &p, &m).unwrap().w0_mode;
        let k = -2.0 * std::f64::consts::PI * ALPHA_FS;
        let err = |panels: usize| {
            let v = k * contour_double_integral_fixed(&p, panels, 2, |t, tp| vacuum_correlator(&m, t, tp)).unwrap();
            (v - closed).abs()
        };
        let errs: Vec<f64> = [8, 16, 32, 64].iter().map(|&n| err(n)).collect();
        for w in errs.windows(2) {
            let slope = (w[0] / w[1]).log2();
            assert!((slope - 4.0).abs() < 0.15, "slope {slope}");
        }
    }

    #[test]
    fn refinement_cap_reports_non_convergence() {
        let (p, m) = setup();
        let spec = QuadratureSpec { n_panels: 1, nodes_per_panel: 1, refinement_factor: 2, max_panels: 4, rel_tol: 1e-15 };
        match numeric_w0_mode(&p, &m, &spec) {
            Err(Error::NonConvergence { panels, previous, last }) => {
                assert_eq!(panels, 4);
                assert!(previous.is_finite() && last.is_finite());
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn period_shift_leaves_integral_unchanged() {
        let (p, m) = setup();
        let s = PhotonState::squeezed(0.7, 0.2).unwrap();
        let spec = QuadratureSpec::default();
        let a = numeric_wr(&s, &p, &m, &spec).unwrap().value;
        let shifted = p.with_emission_time(p.emission_time() + std::f64::consts::PI / m.omega_bar()).unwrap();
        let b = numeric_wr(&s, &shifted, &m, &spec).unwrap().value;
        assert!((a - b).abs() < 1e-9 * a.abs());
    }
}
