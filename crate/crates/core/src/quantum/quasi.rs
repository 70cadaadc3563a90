//! Quasi-momenta and effective masses.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::reduce::{check_node, check_zero_transverse, kg_reduce, KGCase, KGReduction};
use super::QuantumError;
use crate::relkin::{check_on_shell, Background, FourVector};
use crate::specfun::{elliptic_e_complete, mathieu_nu};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuasiModel {
    /// Plane wave: only wave 1, with its null wavevector.
    PlaneWave,
    HighEnergy,
    MultiScale,
    Exact,
}

impl QuasiModel {
    pub const ALL: [QuasiModel; 4] =
        [QuasiModel::PlaneWave, QuasiModel::HighEnergy, QuasiModel::MultiScale, QuasiModel::Exact];

    pub fn label(self) -> &'static str {
        match self {
            QuasiModel::PlaneWave => "pw",
            QuasiModel::HighEnergy => "he",
            QuasiModel::MultiScale => "ms",
            QuasiModel::Exact => "exact",
        }
    }
}

/// `q = q_re + i q_im` and `m*² = q·q`. Only the exact model in a gap has
/// a non-zero imaginary part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasiMomentum {
    pub model: QuasiModel,
    pub q_re: FourVector,
    pub q_im: FourVector,
    pub m_star2: Complex64,
    pub is_band: bool,
    /// Floquet exponent, exact model only.
    pub nu: Option<Complex64>,
    /// `e^{iπν}`, exact model only.
    pub multiplier: Option<Complex64>,
}

impl QuasiMomentum {
    fn real(model: QuasiModel, q: FourVector) -> Self {
        QuasiMomentum {
            model,
            q_re: q,
            q_im: FourVector::ZERO,
            m_star2: Complex64::new(q.square(), 0.0),
            is_band: true,
            nu: None,
            multiplier: None,
        }
    }
}

fn nonzero(v: f64, name: &'static str) -> Result<f64, QuantumError> {
    if v == 0.0 {
        Err(QuantumError::VanishingDenominator(name))
    } else {
        Ok(v)
    }
}

/// Cycle average of the multiple-scale exponent per unit phase:
/// `−k·p/k² + (2/π)(ϖ/k²) E(m)`.
fn multiscale_mean_slope(red: &KGReduction) -> Result<f64, QuantumError> {
    if !(red.varpi2 > 0.0) {
        return Err(QuantumError::Forbidden(format!("ϖ² = {}", red.varpi2)));
    }
    let m = match red.case {
        KGCase::MagneticNode => red.mu2 / red.varpi2,
        KGCase::ZeroTransverse => -red.mu2 / red.varpi2,
    };
    if !(m < 1.0) {
        return Err(QuantumError::Forbidden(format!("elliptic parameter {m} ≥ 1")));
    }
    let v = red.varpi2.sqrt().copysign(red.kp);
    Ok(-red.kp / red.k2 + 2.0 / PI * v / red.k2 * elliptic_e_complete(m)?)
}

pub fn quasimomentum(
    bg: &Background,
    p: &FourVector,
    case: KGCase,
    model: QuasiModel,
) -> Result<QuasiMomentum, QuantumError> {
    check_on_shell(p)?;
    match case {
        KGCase::MagneticNode => check_node(bg)?,
        KGCase::ZeroTransverse => check_zero_transverse(bg, p)?,
    }
    match model {
        QuasiModel::PlaneWave => {
            let k = bg.k1();
            let kp = nonzero(k.dot(p), "k₁·p")?;
            let xi = bg.xi_sigma();
            Ok(QuasiMomentum::real(model, *p + xi * xi / (2.0 * kp) * k))
        }
        QuasiModel::HighEnergy => {
            let (k, mean_a2) = match case {
                KGCase::MagneticNode => (bg.k_bar(), bg.xi_sigma().powi(2)),
                KGCase::ZeroTransverse => (bg.k_delta(), bg.wave1.xi.powi(2) + bg.wave2.xi.powi(2)),
            };
            let kp = nonzero(k.dot(p), "k·p")?;
            Ok(QuasiMomentum::real(model, *p + mean_a2 / (2.0 * kp) * k))
        }
        QuasiModel::MultiScale => {
            let red = kg_reduce(bg, p, case)?;
            let slope = multiscale_mean_slope(&red)?;
            Ok(QuasiMomentum::real(model, *p + slope * red.k))
        }
        QuasiModel::Exact => {
            let red = kg_reduce(bg, p, case)?;
            let fl = mathieu_nu(&red.spec)?;
            let beta = red.kp / red.k2;
            let nu = if beta < 0.0 { -fl.nu() } else { fl.nu() };
            // q = p + (ν_s/2 − k·p/k²) k
            let c = 0.5 * nu - beta;
            let m_star2 = 1.0 - red.kp * beta + 0.25 * red.k2 * nu * nu;
            Ok(QuasiMomentum {
                model,
                q_re: *p + c.re * red.k,
                q_im: c.im * red.k,
                m_star2,
                is_band: fl.is_band,
                nu: Some(fl.nu()),
                multiplier: Some(fl.multiplier()),
            })
        }
    }
}
