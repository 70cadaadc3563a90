//! Longitudinal current of `Φ = w(φ₁, φ₂) e^{ip·x}`.

use num_complex::Complex64;

use super::reduce::{KGCase, KGReduction};
use super::QuantumError;
use crate::relkin::{Background, FourVector};
use crate::specfun::{solve_mathieu, SolveOptions};

/// `w` and its partial derivatives in `φ₁` and `φ₂` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveSample {
    pub w: Complex64,
    pub dw1: Complex64,
    pub dw2: Complex64,
}

/// `j³ = −2ip³|w|² + k₁³(w*w₁' − c.c.) + k₂³(w*w₂' − c.c.)` at each sample.
pub fn longitudinal_current(bg: &Background, p: &FourVector, samples: &[WaveSample]) -> Vec<Complex64> {
    let (k13, k23) = (bg.k1().z(), bg.k2().z());
    samples
        .iter()
        .map(|s| {
            let im1 = (s.w.conj() * s.dw1).im;
            let im2 = (s.w.conj() * s.dw2).im;
            Complex64::new(0.0, -2.0 * p.z() * s.w.norm_sqr() + 2.0 * k13 * im1 + 2.0 * k23 * im2)
        })
        .collect()
}

/// Node wavefunction `w(φ̄) = e^{−i(k̄·p/k̄²)φ̄} F(y)` sampled at the given
/// phases, with `F` the Mathieu solution with `F = 1`, `F' = 0` at the
/// smallest sampled `y`. Since `φ̄ = (φ₁ + φ₂)/2`, `w₁' = w₂' = w'/2`.
pub fn node_wave_samples(red: &KGReduction, phases: &[f64]) -> Result<Vec<WaveSample>, QuantumError> {
    if red.case != KGCase::MagneticNode {
        return Err(QuantumError::Precondition("node samples need a magnetic-node reduction".into()));
    }
    if phases.is_empty() {
        return Ok(Vec::new());
    }
    let ys: Vec<f64> = phases.iter().map(|&p| red.y_of(p)).collect();
    let lo = ys.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let hi = if hi > lo { hi } else { lo + 1e-3 };
    // resolve the local oscillation length with several nodes
    let per_unit = (red.spec.lambda.abs() + 2.0 * red.spec.q.abs()).sqrt().max(1.0);
    let nodes = (((hi - lo) * per_unit * 8.0).ceil() as usize).clamp(201, 2_000_001);
    let sol = solve_mathieu(&red.spec, lo, hi, (1.0, 0.0), &SolveOptions { tol: 1e-12, nodes })?;
    let beta = red.kp / red.k2;
    phases
        .iter()
        .zip(&ys)
        .map(|(&phi, &y)| {
            let (f, fy) = sol
                .eval(y)
                .ok_or_else(|| QuantumError::Precondition(format!("y = {y} outside the solved range")))?;
            let e = Complex64::from_polar(1.0, -beta * phi);
            let w = e * f;
            // dF/dφ̄ = F_y / 2
            let dw = e * Complex64::new(0.5 * fy, -beta * f);
            Ok(WaveSample { w, dw1: 0.5 * dw, dw2: 0.5 * dw })
        })
        .collect()
}
