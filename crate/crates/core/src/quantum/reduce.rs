use super::QuantumError;
use crate::relkin::{check_on_shell, Background, FourVector};
use crate::specfun::MathieuSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KGCase {
    MagneticNode,
    ZeroTransverse,
}

/// Mathieu form of a univariate Klein–Gordon reduction.
///
/// Node: `w(φ̄) = e^{−i(k̄·p/k̄²)φ̄} F(y)` with `y = (φ̄ − φ₀)/2`, where
/// `φ₀ = atan2(p·ε₂, p·ε₁)` so that `a·p = ξ_Σ|p⊥| cos(φ̄ − φ₀)`.
/// Zero transverse: `w(φ_Δ) = e^{−i(k_Δ·p/k_Δ²)φ_Δ} F(y)` with `y = φ_Δ/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KGReduction {
    pub case: KGCase,
    pub spec: MathieuSpec,
    /// `φ₀` for the node case, zero otherwise.
    pub phi0: f64,
    /// Effective wavevector: `k̄` or `k_Δ`.
    pub k: FourVector,
    pub kp: f64,
    pub k2: f64,
    /// Classical frequency data for momentum `p`: `(ϖ², μ²)` with
    /// `φ̇² = ϖ² − μ² sin²((φ̄ − φ₀ − π)/2)` at the node and
    /// `φ̇² = ϖ² + μ² sin²(φ_Δ/2)` otherwise.
    pub varpi2: f64,
    pub mu2: f64,
    /// `λ < 0`, from the phase-averaged `a²`.
    pub quantum_forbidden: bool,
    /// `ϖ² < 0`, from the peak `a²`.
    pub classical_forbidden: bool,
}

impl KGReduction {
    /// Mathieu variable for the physical phase (`φ̄` or `φ_Δ`).
    pub fn y_of(&self, phase: f64) -> f64 {
        match self.case {
            KGCase::MagneticNode => 0.5 * (phase - self.phi0),
            KGCase::ZeroTransverse => 0.5 * phase,
        }
    }

    pub fn phase_of(&self, y: f64) -> f64 {
        match self.case {
            KGCase::MagneticNode => 2.0 * y + self.phi0,
            KGCase::ZeroTransverse => 2.0 * y,
        }
    }

    /// `Q/λ`.
    pub fn ratio(&self) -> f64 {
        self.spec.q / self.spec.lambda
    }
}

pub(crate) fn check_node(bg: &Background) -> Result<(), QuantumError> {
    if !bg.is_head_on() || !bg.shares_polarisation_basis() || !bg.equal_frequencies() {
        return Err(QuantumError::Precondition("node reduction needs head-on equal-frequency waves".into()));
    }
    let (a, b) = (bg.wave1.xi, bg.wave2.xi);
    if (a - b).abs() > 1e-12 * a.max(b).max(1.0) {
        return Err(QuantumError::Precondition("node reduction needs equal intensities".into()));
    }
    Ok(())
}

pub(crate) fn check_zero_transverse(bg: &Background, p: &FourVector) -> Result<(), QuantumError> {
    if !bg.is_head_on() || !bg.shares_polarisation_basis() {
        return Err(QuantumError::Precondition("reduction needs head-on waves with a shared basis".into()));
    }
    if p.transverse_norm() > 1e-12 * p.t() {
        return Err(QuantumError::Precondition("zero-transverse reduction needs p⊥ = 0".into()));
    }
    Ok(())
}

pub fn kg_reduce(bg: &Background, p: &FourVector, case: KGCase) -> Result<KGReduction, QuantumError> {
    check_on_shell(p)?;
    match case {
        KGCase::MagneticNode => {
            check_node(bg)?;
            if p.z().abs() > 1e-12 * p.t() {
                return Err(QuantumError::Precondition("node reduction needs p³ = 0".into()));
            }
            let k = bg.k_bar();
            let (kp, k2) = (k.dot(p), k.square());
            let xi = bg.xi_sigma();
            let pt = p.transverse_norm();
            let lambda = 4.0 * (kp * kp + xi * xi * k2) / (k2 * k2);
            let q = 4.0 * xi * pt / k2;
            let phi0 = if pt == 0.0 { 0.0 } else { p.dot(&bg.wave1.eps2).atan2(p.dot(&bg.wave1.eps1)) };
            let varpi2 = kp * kp + k2 * (xi * xi + 2.0 * xi * pt);
            Ok(KGReduction {
                case,
                spec: MathieuSpec::new(lambda, q),
                phi0,
                k,
                kp,
                k2,
                varpi2,
                mu2: 4.0 * k2 * xi * pt,
                quantum_forbidden: lambda < 0.0,
                classical_forbidden: varpi2 < 0.0,
            })
        }
        KGCase::ZeroTransverse => {
            check_zero_transverse(bg, p)?;
            let k = bg.k_delta();
            let (kp, k2) = (k.dot(p), k.square());
            let (x1, x2) = (bg.wave1.xi, bg.wave2.xi);
            let lambda = 4.0 * (kp * kp + (x1 * x1 + x2 * x2) * k2) / (k2 * k2);
            let q = -4.0 * x1 * x2 / k2;
            let varpi2 = kp * kp + k2 * (x1 + x2).powi(2);
            Ok(KGReduction {
                case,
                spec: MathieuSpec::new(lambda, q),
                phi0: 0.0,
                k,
                kp,
                k2,
                varpi2,
                mu2: -4.0 * k2 * x1 * x2,
                quantum_forbidden: lambda < 0.0,
                classical_forbidden: varpi2 < 0.0,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_without_transverse_momentum() {
        let bg = Background::head_on(0.5, 0.5, 0.01, 0.01).unwrap();
        let r = kg_reduce(&bg, &FourVector::new(1.0, 0.0, 0.0, 0.0), KGCase::MagneticNode).unwrap();
        assert_eq!(r.spec.q, 0.0);
        let expect = 4.0 * (1e-4 + 1e-4) / 1e-8;
        assert!((r.spec.lambda - expect).abs() < 1e-9 * expect);
    }

    #[test]
    fn node_ratio_example() {
        let bg = Background::head_on(0.5, 0.5, 0.01, 0.01).unwrap();
        let r = kg_reduce(&bg, &FourVector::on_shell(2.0, 0.0, 0.0), KGCase::MagneticNode).unwrap();
        assert!((r.ratio() - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn delta_thresholds_are_reported_separately() {
        let bg = Background::head_on(10.0, 10.0, 0.01, 0.01).unwrap();
        // between the averaged and the peak threshold
        let p = FourVector::on_shell(0.0, 0.0, 17.0);
        let r = kg_reduce(&bg, &p, KGCase::ZeroTransverse).unwrap();
        assert!(!r.quantum_forbidden && r.classical_forbidden);
        assert!((r.y_of(3.0) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn preconditions() {
        let bg = Background::head_on(1.0, 1.0, 0.01, 0.01).unwrap();
        assert!(kg_reduce(&bg, &FourVector::on_shell(0.0, 0.0, 1.0), KGCase::MagneticNode).is_err());
        assert!(kg_reduce(&bg, &FourVector::on_shell(1.0, 0.0, 1.0), KGCase::ZeroTransverse).is_err());
        assert!(kg_reduce(&bg, &FourVector::new(3.0, 0.0, 0.0, 0.0), KGCase::ZeroTransverse).is_err());
    }
}
