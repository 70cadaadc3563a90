//! Klein–Gordon states in the two-wave background.
//!
//! The two univariate reductions lead to the canonical Mathieu equation.
//! Around them sit the approximation hierarchy (plane-wave, high-energy,
//! multiple-scale) and the exact Floquet quasi-momentum.

mod approx;
mod current;
mod quasi;
mod reduce;

use thiserror::Error;

use crate::classical::ClassicalError;
use crate::relkin::RelkinError;
use crate::specfun::SpecfunError;

pub use approx::{
    high_energy_validity_ratio, high_energy_wavefunction, multiscale_amplitude, multiscale_amplitude_truncated,
    high_energy_node_exponent, multiscale_phase, multiscale_phase_rate, volkov_exponent, HighEnergyPhase,
};
pub use current::{longitudinal_current, node_wave_samples, WaveSample};
pub use quasi::{quasimomentum, QuasiModel, QuasiMomentum};
pub use reduce::{kg_reduce, KGCase, KGReduction};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuantumError {
    #[error(transparent)]
    Relkin(#[from] RelkinError),
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error(transparent)]
    Classical(#[from] ClassicalError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vanishing denominator: {0} = 0")]
    VanishingDenominator(&'static str),
    #[error("forbidden regime: {0}")]
    Forbidden(String),
}
