//! Approximate phases: Volkov, high-energy and multiple-scale.

use std::f64::consts::PI;

use super::reduce::{KGCase, KGReduction};
use super::QuantumError;
use crate::relkin::{Background, FourVector, PlaneWave};
use crate::specfun::elliptic_e;

/// `−∫₀^φ [2p·a + a²]/(2k·p)` for `a = ξ(ε₁ cos + ε₂ sin)`.
fn circular_exponent(xi: f64, kp: f64, pe1: f64, pe2: f64, phi: f64) -> f64 {
    let (s, c) = phi.sin_cos();
    (xi * xi * phi - 2.0 * xi * (pe1 * s + pe2 * (1.0 - c))) / (2.0 * kp)
}

/// Volkov exponent `u(φ)` of a single circularly polarised wave, `u(0) = 0`.
pub fn volkov_exponent(wave: &PlaneWave, p: &FourVector, phi: f64) -> Result<f64, QuantumError> {
    let kp = wave.k().dot(p);
    if kp == 0.0 {
        return Err(QuantumError::VanishingDenominator("k·p"));
    }
    Ok(circular_exponent(wave.xi, kp, p.dot(&wave.eps1), p.dot(&wave.eps2), phi))
}

/// Volkov exponent at the magnetic node: `k → k̄`, `ξ → ξ_Σ`, `φ → φ̄`.
pub fn high_energy_node_exponent(bg: &Background, p: &FourVector, phi_bar: f64) -> Result<f64, QuantumError> {
    super::reduce::check_node(bg)?;
    let kp = bg.k_bar().dot(p);
    if kp == 0.0 {
        return Err(QuantumError::VanishingDenominator("k̄·p"));
    }
    let e = &bg.wave1;
    Ok(circular_exponent(bg.xi_sigma(), kp, p.dot(&e.eps1), p.dot(&e.eps2), phi_bar))
}

/// Terms of the high-energy phase `p·x + f + g + h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HighEnergyPhase {
    pub free: f64,
    /// `−∫ p·a₁/(k₁·p) dφ₁`.
    pub f: f64,
    /// `−∫ p·a₂/(k₂·p) dφ₂`.
    pub g: f64,
    /// `−∫ a²/(2k_Δ·p) dφ_Δ`.
    pub h: f64,
}

impl HighEnergyPhase {
    pub fn phase(&self) -> f64 {
        self.free + self.f + self.g + self.h
    }

    /// Field-dependent part of the phase.
    pub fn exponent(&self) -> f64 {
        self.f + self.g + self.h
    }
}

fn linear_term(wave: &PlaneWave, p: &FourVector, phi: f64, name: &'static str) -> Result<f64, QuantumError> {
    if wave.xi == 0.0 {
        return Ok(0.0);
    }
    let kp = wave.k().dot(p);
    if kp == 0.0 {
        return Err(QuantumError::VanishingDenominator(name));
    }
    let (s, c) = phi.sin_cos();
    Ok(-wave.xi * (p.dot(&wave.eps1) * s + p.dot(&wave.eps2) * (1.0 - c)) / kp)
}

/// High-energy wavefunction phase at `x`; the amplitude is one.
///
/// The waves must share a polarisation basis, so that
/// `a² = −(ξ₁² + ξ₂² + 2ξ₁ξ₂ cos φ_Δ)`. All integrals start at zero phase.
pub fn high_energy_wavefunction(bg: &Background, p: &FourVector, x: &FourVector) -> Result<HighEnergyPhase, QuantumError> {
    if !bg.shares_polarisation_basis() {
        return Err(QuantumError::Precondition("waves must share a polarisation basis".into()));
    }
    let ph = bg.phase_variables(x);
    let f = linear_term(&bg.wave1, p, ph.phi1, "k₁·p")?;
    let g = linear_term(&bg.wave2, p, ph.phi2, "k₂·p")?;
    let (x1, x2) = (bg.wave1.xi, bg.wave2.xi);
    let h = if x1 == 0.0 && x2 == 0.0 {
        0.0
    } else {
        let kp = bg.k_delta().dot(p);
        if kp == 0.0 {
            return Err(QuantumError::VanishingDenominator("k_Δ·p"));
        }
        let d = ph.delta;
        ((x1 * x1 + x2 * x2) * d + 2.0 * x1 * x2 * d.sin()) / (2.0 * kp)
    };
    Ok(HighEnergyPhase { free: p.dot(x), f, g, h })
}

/// `max_φ −k̄²(a² + 2a·p)/(k̄·p)² = k̄²(ξ_Σ² + 2ξ_Σ|p⊥|)/(k̄·p)²` at the node.
/// The high-energy form needs this to be small.
pub fn high_energy_validity_ratio(bg: &Background, p: &FourVector) -> Result<f64, QuantumError> {
    super::reduce::check_node(bg)?;
    let k = bg.k_bar();
    let kp = k.dot(p);
    if kp == 0.0 {
        return Err(QuantumError::VanishingDenominator("k̄·p"));
    }
    let xi = bg.xi_sigma();
    Ok(k.square() * (xi * xi + 2.0 * xi * p.transverse_norm()) / (kp * kp))
}

/// Elliptic form of the classical rate: `φ̇² = ϖ²(1 − m sin² x(φ))`.
struct EllipticRate {
    varpi_signed: f64,
    m: f64,
    shift: f64,
}

impl EllipticRate {
    fn new(red: &KGReduction) -> Result<Self, QuantumError> {
        let forbidden = || QuantumError::Forbidden(format!("ϖ² = {}, μ² = {}", red.varpi2, red.mu2));
        if !(red.varpi2 > 0.0) {
            return Err(forbidden());
        }
        let (m, shift) = match red.case {
            KGCase::MagneticNode => (red.mu2 / red.varpi2, red.phi0 + PI),
            KGCase::ZeroTransverse => (-red.mu2 / red.varpi2, 0.0),
        };
        if !(m < 1.0) {
            return Err(forbidden());
        }
        let v = red.varpi2.sqrt();
        Ok(EllipticRate { varpi_signed: if red.kp < 0.0 { -v } else { v }, m, shift })
    }

    fn arg(&self, phase: f64) -> f64 {
        0.5 * (phase - self.shift)
    }
}

/// Multiple-scale exponent `u^ms(φ) = −(k·p/k²)φ + (1/k²)∫₀^φ φ̇^cl`,
/// in closed form through `E(·|m)`. Vanishes identically without field.
pub fn multiscale_phase(red: &KGReduction, phase: f64) -> Result<f64, QuantumError> {
    let r = EllipticRate::new(red)?;
    let e1 = elliptic_e(r.arg(phase), r.m)?;
    let e0 = elliptic_e(r.arg(0.0), r.m)?;
    Ok(-red.kp / red.k2 * phase + 2.0 * r.varpi_signed / red.k2 * (e1 - e0))
}

/// `φ̇^cl(φ)/k²`, the derivative of the non-linear part of [`multiscale_phase`].
pub fn multiscale_phase_rate(red: &KGReduction, phase: f64) -> Result<f64, QuantumError> {
    let r = EllipticRate::new(red)?;
    let s = r.arg(phase).sin();
    Ok(r.varpi_signed * (1.0 - r.m * s * s).sqrt() / red.k2)
}

fn amplitude_argument(red: &KGReduction, bg: &Background, phi_delta: f64) -> Result<f64, QuantumError> {
    if red.case != KGCase::ZeroTransverse {
        return Err(QuantumError::Precondition("amplitude is defined for the zero-transverse case".into()));
    }
    if red.kp == 0.0 {
        return Err(QuantumError::VanishingDenominator("k_Δ·p"));
    }
    let (x1, x2) = (bg.wave1.xi, bg.wave2.xi);
    let a2 = -(x1 * x1 + x2 * x2 + 2.0 * x1 * x2 * phi_delta.cos());
    Ok(red.k2 * a2 / (red.kp * red.kp))
}

/// `(1 − k_Δ²a²/(k_Δ·p)²)^{−1/4}`.
pub fn multiscale_amplitude(red: &KGReduction, bg: &Background, phi_delta: f64) -> Result<f64, QuantumError> {
    let base = 1.0 - amplitude_argument(red, bg, phi_delta)?;
    if !(base > 0.0) {
        return Err(QuantumError::Forbidden(format!("amplitude base {base} is not positive")));
    }
    Ok(base.powf(-0.25))
}

/// First order in `k_Δ²` of [`multiscale_amplitude`].
pub fn multiscale_amplitude_truncated(red: &KGReduction, bg: &Background, phi_delta: f64) -> Result<f64, QuantumError> {
    Ok(1.0 + 0.25 * amplitude_argument(red, bg, phi_delta)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate;
    use crate::quantum::kg_reduce;

    #[test]
    fn volkov_transverse_free() {
        let bg = Background::single(1.5, 0.02).unwrap();
        let p = FourVector::on_shell(0.0, 0.0, 0.7);
        let kp = bg.k1().dot(&p);
        for phi in [0.3, 2.0, 11.0] {
            let u = volkov_exponent(&bg.wave1, &p, phi).unwrap();
            assert!((u - 2.25 * phi / (2.0 * kp)).abs() < 1e-12);
        }
        let p0 = FourVector::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(volkov_exponent(&bg.wave1.with_xi(0.0), &p0, 4.0).unwrap(), 0.0);
    }

    #[test]
    fn volkov_matches_quadrature() {
        let w = Background::single(0.8, 0.05).unwrap().wave1;
        let p = FourVector::on_shell(0.4, -1.1, 0.3);
        let kp = w.k().dot(&p);
        let integrand = |t: f64| {
            let a = w.potential(t);
            -(2.0 * p.dot(&a) + a.square()) / (2.0 * kp)
        };
        for phi in [-3.0, 0.9, 7.5] {
            let q = integrate(integrand, 0.0, phi, 1e-14, 1e-14).unwrap();
            assert!((volkov_exponent(&w, &p, phi).unwrap() - q).abs() < 1e-10);
        }
    }

    #[test]
    fn volkov_rejects_vanishing_kp() {
        let w = Background::single(1.0, 0.05).unwrap().wave1;
        // k along −z: k·p = ω(p⁰ + p_z) vanishes only for p on the light cone
        let p = FourVector::new(1.0, 0.0, 0.0, -1.0);
        assert!(matches!(volkov_exponent(&w, &p, 1.0), Err(QuantumError::VanishingDenominator(_))));
    }

    #[test]
    fn high_energy_zero_field() {
        let bg = Background::head_on(0.0, 0.0, 0.01, 0.02).unwrap();
        let p = FourVector::on_shell(0.3, 0.2, 1.0);
        let x = FourVector::new(5.0, 1.0, -2.0, 30.0);
        let h = high_energy_wavefunction(&bg, &p, &x).unwrap();
        assert_eq!(h.phase(), p.dot(&x));
    }

    #[test]
    fn high_energy_zero_transverse_quadrature() {
        let bg = Background::head_on(2.0, 1.5, 0.01, 0.013).unwrap();
        let p = FourVector::on_shell(0.0, 0.0, 3.0);
        let x = FourVector::new(40.0, 0.0, 0.0, 25.0);
        let h = high_energy_wavefunction(&bg, &p, &x).unwrap();
        assert_eq!(h.f, 0.0);
        assert_eq!(h.g, 0.0);
        let kp = bg.k_delta().dot(&p);
        let d = bg.phase_variables(&x).delta;
        let q = integrate(|t| -bg.potential_at_phases(t, 0.0).square() / (2.0 * kp), 0.0, d, 1e-13, 1e-13).unwrap();
        assert!((h.h - q).abs() < 1e-10 * q.abs().max(1.0));
    }

    #[test]
    fn multiscale_zero_field_vanishes() {
        let bg = Background::head_on(0.0, 0.0, 0.01, 0.01).unwrap();
        let p = FourVector::on_shell(0.0, 0.0, 2.0);
        let r = kg_reduce(&bg, &p, KGCase::ZeroTransverse).unwrap();
        for phi in [0.5, 3.0, -8.0] {
            assert!(multiscale_phase(&r, phi).unwrap().abs() < 1e-9);
        }
    }

    fn fig2_left() -> (Background, FourVector) {
        (Background::head_on(10.0, 10.0, 0.01, 0.01).unwrap(), FourVector::on_shell(0.0, 0.0, 20.0005))
    }

    #[test]
    fn multiscale_against_direct_quadrature() {
        let (bg, p) = fig2_left();
        let r = kg_reduce(&bg, &p, KGCase::ZeroTransverse).unwrap();
        let kd2 = r.k2;
        let rate = |t: f64| {
            let v = r.kp * r.kp + kd2 * (400.0 - 400.0 * (0.5 * t).sin().powi(2));
            v.sqrt() / kd2
        };
        for phi in [0.7, 3.1, 9.0] {
            let q = integrate(rate, 0.0, phi, 1e-13, 1e-14).unwrap();
            let u = multiscale_phase(&r, phi).unwrap() + r.kp / kd2 * phi;
            assert!((u - q).abs() < 1e-10 * q.abs(), "{u} vs {q}");
        }
    }

    #[test]
    fn multiscale_rate_is_derivative() {
        let bg = Background::head_on(1.0, 1.0, 0.01, 0.01).unwrap();
        let p = FourVector::on_shell(0.8, -0.3, 0.0);
        let r = kg_reduce(&bg, &p, KGCase::MagneticNode).unwrap();
        let h = 1e-4;
        for phi in [-2.0, 0.1, 1.7, 5.0] {
            let lin = |t: f64| multiscale_phase(&r, t).unwrap() + r.kp / r.k2 * t;
            let fd = (lin(phi + h) - lin(phi - h)) / (2.0 * h);
            let exact = multiscale_phase_rate(&r, phi).unwrap();
            assert!((fd - exact).abs() < 1e-6 * exact.abs(), "{fd} vs {exact}");
        }
    }

    #[test]
    fn multiscale_expansion_reproduces_high_energy() {
        let bg = Background::head_on(1.0, 0.5, 0.01, 0.01).unwrap();
        let phi = 2.3;
        let mut last = f64::INFINITY;
        for pz in [50.0, 100.0, 200.0] {
            let p = FourVector::on_shell(0.0, 0.0, pz);
            let r = kg_reduce(&bg, &p, KGCase::ZeroTransverse).unwrap();
            let ms = multiscale_phase(&r, phi).unwrap();
            // x with φ_Δ = 2ωz = phi
            let x = FourVector::new(0.0, 0.0, 0.0, phi / 0.02);
            let he = high_energy_wavefunction(&bg, &p, &x).unwrap().h;
            let err = (ms - he).abs() / he.abs();
            // relative deviation scales as k_Δ²a²/(k_Δ·p)² ∝ 1/pz²
            assert!(err < 4.0 * 0.0004 * 2.25 / (0.02 * pz).powi(2), "{err}");
            assert!(err < last / 3.0);
            last = err;
        }
    }

    #[test]
    fn amplitude() {
        let (bg, p) = fig2_left();
        let r = kg_reduce(&bg, &p, KGCase::ZeroTransverse).unwrap();
        // at φ_Δ = π, a² = 0 for equal intensities
        assert!((multiscale_amplitude(&r, &bg, PI).unwrap() - 1.0).abs() < 1e-12);
        // at φ_Δ = 0 the base is 1 − 0.16/0.16000800... > 0
        let base = 1.0 - 0.0004 * 400.0 / (0.02 * 20.0005f64).powi(2);
        let expect = base.powf(-0.25);
        assert!((multiscale_amplitude(&r, &bg, 0.0).unwrap() - expect).abs() < 1e-9 * expect);
        let vacuum = Background::head_on(0.0, 0.0, 0.01, 0.01).unwrap();
        let free = kg_reduce(&vacuum, &p, KGCase::ZeroTransverse).unwrap();
        assert_eq!(multiscale_amplitude(&free, &vacuum, 1.0).unwrap(), 1.0);
        let trunc = multiscale_amplitude_truncated(&r, &bg, 2.0).unwrap();
        assert!(trunc > 1.0);
    }
}
