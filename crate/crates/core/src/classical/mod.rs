//! Lorentz-force dynamics in the two-wave background.
//!
//! Two analytic solutions are provided: motion in the plane of a magnetic
//! node and motion with vanishing transverse canonical momentum. An adaptive
//! Runge–Kutta integration of the full Lorentz equation serves as the reference.

mod delta;
mod lorentz;
mod node;
mod trajectory;

use thiserror::Error;

use crate::relkin::{FourVector, RelkinError};
use crate::specfun::SpecfunError;

pub use delta::{delta_orbit, delta_phases, forbidden_by_peak_potential, DeltaOrbit, Regime};
pub use lorentz::{
    canonical_momentum, conserved_longitudinal, conserved_transverse, integrate_lorentz, integrate_lorentz_on,
    LorentzOptions,
};
pub use node::{
    magnetic_node_orbit, magnetic_node_orbit_with, magnetic_node_phase, node_phase_rate_squared,
    MagneticNodeOrbit, MuPerpCoefficient,
};
pub use trajectory::{reconstruct_trajectory, OrbitCase, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ParticleState {
    pub tau: f64,
    pub x: FourVector,
    pub p: FourVector,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassicalError {
    #[error(transparent)]
    Relkin(#[from] RelkinError),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("forbidden regime: ϖ_Δ² = {varpi2} < 0, the particle cannot enter the field")]
    Forbidden { varpi2: f64 },
    #[error("Lorentz integration failed at τ = {}: {reason}", last.tau)]
    Integration { reason: String, last: ParticleState },
    #[error("on-shell drift {drift} exceeds tolerance {tol}")]
    Drift { drift: f64, tol: f64 },
}
