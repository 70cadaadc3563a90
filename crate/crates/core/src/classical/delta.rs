//! Motion with vanishing transverse canonical momentum.
//!
//! `(dφ_Δ/dτ)² = ϖ_Δ² + μ_Δ² sin²(φ_Δ/2)` and `φ_Σ` advances linearly.

use super::ClassicalError;
use crate::relkin::{Background, FourVector};
use crate::specfun::jacobi_am;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Allowed,
    Forbidden,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaOrbit {
    pub varpi_delta2: f64,
    pub mu_delta2: f64,
    pub regime: Regime,
    /// `k_Δ·p_in`.
    pub kd_p: f64,
    /// `k_Σ·p_in`.
    pub ks_p: f64,
}

fn check_background(bg: &Background) -> Result<(), ClassicalError> {
    if !bg.is_head_on() || !bg.shares_polarisation_basis() {
        return Err(ClassicalError::Precondition(
            "zero-transverse solution needs head-on waves with a shared basis".into(),
        ));
    }
    Ok(())
}

pub fn delta_orbit(bg: &Background, p_in: &FourVector) -> Result<DeltaOrbit, ClassicalError> {
    check_background(bg)?;
    if p_in.transverse_norm() > 1e-12 * p_in.t().abs().max(1.0) {
        return Err(ClassicalError::Precondition(format!(
            "incoming momentum must have zero transverse part, got ({}, {})",
            p_in.x(),
            p_in.y()
        )));
    }
    let kd = bg.k_delta();
    let kd2 = kd.square();
    let kd_p = kd.dot(p_in);
    let xs = bg.xi_sigma();
    let varpi_delta2 = kd_p * kd_p + kd2 * xs * xs;
    let mu_delta2 = -4.0 * kd2 * bg.wave1.xi * bg.wave2.xi;
    Ok(DeltaOrbit {
        varpi_delta2,
        mu_delta2,
        regime: if varpi_delta2 < 0.0 { Regime::Forbidden } else { Regime::Allowed },
        kd_p,
        ks_p: bg.k_sigma().dot(p_in),
    })
}

/// Forbidden test written directly in terms of the largest `|a²|` sampled
/// from the background: `−k_Δ²·max(−a²) > (k_Δ·p_in)²`.
pub fn forbidden_by_peak_potential(bg: &Background, p_in: &FourVector) -> bool {
    let kd = bg.k_delta();
    let peak = (0..64)
        .map(|i| {
            let phi = std::f64::consts::TAU * i as f64 / 64.0;
            -bg.potential_at_phases(phi, 0.0).square()
        })
        .fold(f64::NEG_INFINITY, f64::max);
    -kd.square() * peak > kd.dot(p_in).powi(2)
}

impl DeltaOrbit {
    /// `ϖ_Δ` carrying the sign of `k_Δ·p_in`.
    pub fn signed_varpi(&self) -> f64 {
        let v = self.varpi_delta2.max(0.0).sqrt();
        if self.kd_p < 0.0 {
            -v
        } else {
            v
        }
    }

    fn require_allowed(&self) -> Result<(), ClassicalError> {
        match self.regime {
            Regime::Allowed => Ok(()),
            Regime::Forbidden => Err(ClassicalError::Forbidden { varpi2: self.varpi_delta2 }),
        }
    }

    /// `(φ_Δ, φ_Σ)` with both phases zero at `τ = 0`.
    pub fn phases(&self, tau: f64) -> Result<(f64, f64), ClassicalError> {
        self.require_allowed()?;
        let sigma = self.ks_p * tau;
        if self.varpi_delta2 == 0.0 {
            return Ok((0.0, sigma));
        }
        let w = self.signed_varpi();
        let m = -self.mu_delta2 / self.varpi_delta2;
        Ok((2.0 * jacobi_am(0.5 * w * tau, m)?, sigma))
    }

    /// Right-hand side `ϖ_Δ² + μ_Δ² sin²(φ_Δ/2)`.
    pub fn rate_squared(&self, phi_delta: f64) -> f64 {
        self.varpi_delta2 + self.mu_delta2 * (0.5 * phi_delta).sin().powi(2)
    }

    /// `dφ_Δ/dτ` at phase `φ_Δ`, sign of `k_Δ·p_in`.
    pub fn rate(&self, phi_delta: f64) -> f64 {
        let r = self.rate_squared(phi_delta).max(0.0).sqrt();
        if self.kd_p < 0.0 {
            -r
        } else {
            r
        }
    }
}

pub fn delta_phases(
    orbit: &DeltaOrbit,
    _bg: &Background,
    _p_in: &FourVector,
    tau: f64,
) -> Result<(f64, f64), ClassicalError> {
    orbit.phases(tau)
}
