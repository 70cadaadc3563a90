//! Special functions: Jacobi amplitude, elliptic integrals, Bessel functions
//! and the Mathieu characteristic exponent.

mod bessel;
mod elliptic;
mod mathieu;

use thiserror::Error;

pub use bessel::{bessel_j, bessel_j_orders, bessel_j_triplet};
pub use elliptic::{
    carlson_rd, carlson_rf, elliptic_e, elliptic_e_complete, elliptic_f, elliptic_k, jacobi_am,
    jacobi_sn_cn_dn,
};
pub use mathieu::{
    hill_half_trace, mathieu_nu, mathieu_nu_with, monodromy_half_trace, solve_mathieu, FloquetExponent,
    HalfTrace, MathieuOptions, MathieuSolution, MathieuSpec, SolveOptions,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecfunError {
    #[error("elliptic parameter out of range: m = {0} (must be <= 1)")]
    ParameterOutOfRange(f64),
    #[error("integrator did not converge: {0}")]
    NonConvergence(String),
    #[error("invalid interval [{y0}, {y1}]")]
    InvalidInterval { y0: f64, y1: f64 },
}
