//! Decoherence and recoherence of two-path electron interference coupled to
//! a single excited photon mode.
//!
//! The electrons follow a pair of mirror-symmetric quartic paths
//! ([`geometry`]). The excited mode may sit in its vacuum, a squeezed
//! vacuum, a thermal state or carry a classical field ([`photon_state`]).
//! [`coherence`] evaluates the coherence functional in closed form,
//! [`oracle`] re-derives it by direct quadrature and Monte Carlo, and
//! [`estimates`] holds the order-of-magnitude feasibility formulas.
//!
//! ```
//! use recoherence_lab::{coherence, geometry::PathFamily, photon_state::{ModeSpec, PhotonState}};
//!
//! let path = PathFamily::dimensionless(0.05, 0.0).unwrap();
//! let mode = ModeSpec::dimensionless(3.0, 1.0).unwrap();
//! let state = PhotonState::squeezed(1.0, 0.0).unwrap();
//! let res = coherence::coherence_functional(&state, &path, &mode).unwrap();
//! assert!(res.w_total_mode <= 0.0);
//! ```



pub mod check;
pub mod cli;
pub mod coherence;
pub mod config;
pub mod error;
pub mod estimates;
pub mod figures;
pub mod geometry;
pub mod oracle;
pub mod photon_state;
pub mod special;
pub mod sweep;
pub mod table;

pub use error::{Error, Result};
