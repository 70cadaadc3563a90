//! Motion in the plane of a magnetic node (`z = 0`, equal waves).
//!
//! With `φ̃ = φ̄ − φ₀` the phase obeys
//! `(dφ̃/dτ)² = ϖ⊥² − μ⊥² sin²(φ̃/2)`, solved by
//! `φ̃ = 2 am(ϖ⊥τ/2 | μ⊥²/ϖ⊥²)`.

use super::ClassicalError;
use crate::relkin::{Background, FourVector};
use crate::specfun::{elliptic_f, jacobi_am};

/// Coefficient `c` in `μ⊥² = c·k̄²ξ_Σ|Π⊥|`.
///
/// `Four` follows from the Lorentz equation; `Two` is kept so that the
/// alternative can be checked against the integrator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuPerpCoefficient {
    Two,
    Four,
}

impl MuPerpCoefficient {
    fn value(self) -> f64 {
        match self {
            MuPerpCoefficient::Two => 2.0,
            MuPerpCoefficient::Four => 4.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagneticNodeOrbit {
    pub varpi_perp2: f64,
    pub mu_perp2: f64,
    pub phi0: f64,
    pub s: f64,
    /// `k̄⁰ = ω`.
    pub omega: f64,
    pub xi_sigma: f64,
    /// Transverse canonical momentum `(Π_x, Π_y)`.
    pub pi_perp: [f64; 2],
    pub coefficient: MuPerpCoefficient,
}

fn check_node_background(bg: &Background) -> Result<(), ClassicalError> {
    if !bg.is_head_on() || !bg.shares_polarisation_basis() {
        return Err(ClassicalError::Precondition("node solution needs head-on waves with a shared basis".into()));
    }
    if !bg.equal_frequencies() {
        return Err(ClassicalError::Precondition("node solution needs equal frequencies".into()));
    }
    let (x1, x2) = (bg.wave1.xi, bg.wave2.xi);
    if (x1 - x2).abs() > 1e-12 * x1.max(x2).max(1.0) {
        return Err(ClassicalError::Precondition(format!("node solution needs equal intensities, got {x1} and {x2}")));
    }
    Ok(())
}

pub fn magnetic_node_orbit(bg: &Background, pi_in: &FourVector) -> Result<MagneticNodeOrbit, ClassicalError> {
    magnetic_node_orbit_with(bg, pi_in, MuPerpCoefficient::Four)
}

pub fn magnetic_node_orbit_with(
    bg: &Background,
    pi_in: &FourVector,
    coefficient: MuPerpCoefficient,
) -> Result<MagneticNodeOrbit, ClassicalError> {
    check_node_background(bg)?;
    if pi_in.z().abs() > 1e-12 * pi_in.transverse_norm().max(1.0) {
        return Err(ClassicalError::Precondition(format!(
            "canonical momentum must be transverse, Π_z = {}",
            pi_in.z()
        )));
    }
    let kbar2 = bg.k_bar().square();
    let xi = bg.xi_sigma();
    let pi_abs = pi_in.transverse_norm();
    let varpi_perp2 = kbar2 * (1.0 + (pi_abs + xi).powi(2));
    let mu_perp2 = coefficient.value() * kbar2 * xi * pi_abs;
    let phi0 = if pi_abs == 0.0 {
        0.0
    } else {
        pi_in.dot(&bg.wave1.eps2).atan2(pi_in.dot(&bg.wave1.eps1))
    };
    Ok(MagneticNodeOrbit {
        varpi_perp2,
        mu_perp2,
        phi0,
        s: mu_perp2 / varpi_perp2,
        omega: bg.k_bar().t(),
        xi_sigma: xi,
        pi_perp: [pi_in.x(), pi_in.y()],
        coefficient,
    })
}

impl MagneticNodeOrbit {
    pub fn varpi(&self) -> f64 {
        self.varpi_perp2.sqrt()
    }

    fn check(&self) -> Result<(), ClassicalError> {
        if !(self.s < 1.0) {
            return Err(ClassicalError::Precondition(format!("parameter s = {} must be below 1", self.s)));
        }
        Ok(())
    }

    /// `φ̄(τ)` with `τ` measured from `φ̃ = 0`.
    pub fn phase(&self, tau: f64) -> Result<f64, ClassicalError> {
        self.check()?;
        Ok(2.0 * jacobi_am(0.5 * self.varpi() * tau, self.s)? + self.phi0)
    }

    /// Proper time at which the orbit passes the phase `φ̄`.
    pub fn tau_at_phase(&self, phi_bar: f64) -> Result<f64, ClassicalError> {
        self.check()?;
        Ok(2.0 * elliptic_f(0.5 * (phi_bar - self.phi0), self.s)? / self.varpi())
    }

    /// Right-hand side `ϖ⊥² − μ⊥² sin²(φ̃/2)` of the phase equation.
    pub fn rate_squared(&self, phi_bar: f64) -> f64 {
        self.varpi_perp2 - self.mu_perp2 * (0.5 * (phi_bar - self.phi0)).sin().powi(2)
    }

    /// `dφ̄/dτ` along the orbit at phase `φ̄`.
    pub fn rate(&self, phi_bar: f64) -> f64 {
        self.rate_squared(phi_bar).max(0.0).sqrt()
    }
}

pub fn magnetic_node_phase(orbit: &MagneticNodeOrbit, tau: f64) -> Result<f64, ClassicalError> {
    orbit.phase(tau)
}

/// `(dφ̄/dτ)²` implied directly by transverse canonical-momentum conservation
/// at the node: `k̄²(1 + |Π⊥ − a⊥(φ̄)|²)`. Independent of `ϖ⊥`, `μ⊥`.
pub fn node_phase_rate_squared(bg: &Background, pi_in: &FourVector, phi_bar: f64) -> f64 {
    let a = bg.potential_at_phases(phi_bar, phi_bar);
    let px = pi_in.x() - a.x();
    let py = pi_in.y() - a.y();
    bg.k_bar().square() * (1.0 + px * px + py * py)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bg() -> Background {
        Background::head_on(10.0, 10.0, 0.01, 0.01).unwrap()
    }

    #[test]
    fn zero_canonical_momentum_gives_linear_phase() {
        let o = magnetic_node_orbit(&bg(), &FourVector::ZERO).unwrap();
        assert_eq!(o.s, 0.0);
        assert_eq!(o.phi0, 0.0);
        let w = o.varpi();
        for tau in [0.0, 1.0, 17.5] {
            assert!((o.phase(tau).unwrap() - w * tau).abs() < 1e-13);
        }
    }

    #[test]
    fn coefficients_follow_conservation() {
        let b = bg();
        let pi = FourVector::new(0.0, 3.0, -4.0, 0.0);
        let o = magnetic_node_orbit(&b, &pi).unwrap();
        assert!(o.s > 0.0 && o.s < 1.0);
        for i in 0..40 {
            let phi = -3.0 + 0.3 * i as f64;
            let direct = node_phase_rate_squared(&b, &pi, phi);
            assert!((o.rate_squared(phi) - direct).abs() < 1e-14 * direct);
        }
        let half = magnetic_node_orbit_with(&b, &pi, MuPerpCoefficient::Two).unwrap();
        assert!((half.s - 0.5 * o.s).abs() < 1e-15);
    }

    #[test]
    fn tau_at_phase_inverts_phase() {
        let o = magnetic_node_orbit(&bg(), &FourVector::new(0.0, -7.0, 2.0, 0.0)).unwrap();
        for tau in [-30.0, 0.0, 12.0, 95.0] {
            let phi = o.phase(tau).unwrap();
            assert!((o.tau_at_phase(phi).unwrap() - tau).abs() < 1e-8);
        }
    }

    #[test]
    fn preconditions() {
        let unequal = Background::head_on(10.0, 9.0, 0.01, 0.01).unwrap();
        assert!(magnetic_node_orbit(&unequal, &FourVector::ZERO).is_err());
        assert!(magnetic_node_orbit(&bg(), &FourVector::new(0.0, 1.0, 0.0, 0.5)).is_err());
    }
}
