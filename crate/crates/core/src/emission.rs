//! Nonlinear Compton harmonics of a scalar charge in a circularly polarised
//! plane wave, and the recoil diagnostic for node states.

use rayon::prelude::*;
use thiserror::Error;

use crate::quad::{self, QuadError};
use crate::specfun::bessel_j_orders;

/// CODATA fine-structure constant.
pub const ALPHA: f64 = 1.0 / 137.035_999;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EmissionError {
    #[error("invalid emission parameters: {0}")]
    InvalidConfig(String),
    #[error("u = {u} outside [0, {u_s}]")]
    OutOfRange { u: f64, u_s: f64 },
    #[error("harmonic {s}: {source}")]
    Quadrature { s: usize, source: QuadError },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmissionConfig {
    pub alpha: f64,
    pub xi: f64,
    /// `k·p` in units of `m²`.
    pub kp: f64,
    pub s_max: usize,
    /// Relative quadrature tolerance, also the spectrum cut-off fraction.
    pub quad_tol: f64,
    /// A spectrum counts as converged when its tail estimate is below
    /// `tail_tol·total`.
    pub tail_tol: f64,
}

impl EmissionConfig {
    pub fn new(xi: f64, kp: f64, s_max: usize) -> Self {
        EmissionConfig { alpha: ALPHA, xi, kp, s_max, quad_tol: 1e-10, tail_tol: 1e-8 }
    }

    pub fn validate(&self) -> Result<(), EmissionError> {
        let bad = |m: String| Err(EmissionError::InvalidConfig(m));
        if !(self.xi >= 0.0 && self.xi.is_finite()) {
            return bad(format!("xi = {}", self.xi));
        }
        if !(self.kp > 0.0 && self.kp.is_finite()) {
            return bad(format!("k·p = {}", self.kp));
        }
        if self.s_max < 1 {
            return bad("s_max must be at least 1".into());
        }
        if !(self.quad_tol > 0.0) || !(self.tail_tol > 0.0) || !(self.alpha > 0.0) {
            return bad("alpha and tolerances must be positive".into());
        }
        Ok(())
    }

    /// Kinematic edge `u_s = 2s k·p/(1 + ξ²)`.
    pub fn u_edge(&self, s: usize) -> f64 {
        2.0 * s as f64 * self.kp / (1.0 + self.xi * self.xi)
    }
}

/// `z = (2sξ/√(1+ξ²)) √((u/u_s)(1 − u/u_s))`.
pub fn bessel_argument(s: usize, xi: f64, u: f64, u_s: f64) -> Result<f64, EmissionError> {
    if !(0.0..=u_s).contains(&u) {
        return Err(EmissionError::OutOfRange { u, u_s });
    }
    let t = u / u_s;
    Ok(2.0 * s as f64 * xi / (1.0 + xi * xi).sqrt() * (t * (1.0 - t)).max(0.0).sqrt())
}

/// Integrand of `W_s` in `t = u/u_s`, without the prefactor.
fn integrand(s: usize, xi: f64, u_s: f64, t: f64) -> f64 {
    let u = u_s * t;
    let z = 2.0 * s as f64 * xi / (1.0 + xi * xi).sqrt() * (t * (1.0 - t)).max(0.0).sqrt();
    let j = bessel_j_orders(s + 1, z);
    let bracket = -4.0 * j[s] * j[s] * (1.0 + xi * xi) + 2.0 * xi * xi * (j[s + 1].powi(2) + j[s - 1].powi(2));
    u_s * bracket / ((1.0 + u) * (1.0 + u))
}

/// Emission probability per unit phase into harmonic `s`.
pub fn harmonic_probability(cfg: &EmissionConfig, s: usize) -> Result<f64, EmissionError> {
    cfg.validate()?;
    if s == 0 {
        return Err(EmissionError::InvalidConfig("harmonic index starts at 1".into()));
    }
    if cfg.xi == 0.0 {
        return Ok(0.0);
    }
    let u_s = cfg.u_edge(s);
    let f = |t: f64| integrand(s, cfg.xi, u_s, t);
    let v = quad::integrate(f, 0.0, 1.0, 0.0, cfg.quad_tol).map_err(|source| EmissionError::Quadrature { s, source })?;
    Ok(cfg.alpha / (4.0 * cfg.kp) * v)
}

#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicSpectrum {
    pub entries: Vec<(usize, f64)>,
    pub total: f64,
    /// Geometric extrapolation of the harmonics beyond the last entry.
    pub tail_estimate: f64,
    pub converged: bool,
}

impl HarmonicSpectrum {
    /// `(s, W_s, Σ_{s'≤s} W_{s'})` rows.
    pub fn cumulative(&self) -> Vec<(usize, f64, f64)> {
        let mut acc = 0.0;
        self.entries
            .iter()
            .map(|&(s, w)| {
                acc += w;
                (s, w, acc)
            })
            .collect()
    }
}

const CHUNK: usize = 8;

/// Harmonics `1..=s_max`, evaluated in parallel chunks. Stops early once three
/// consecutive `W_s` fall below `quad_tol·total`.
pub fn spectrum(cfg: &EmissionConfig) -> Result<HarmonicSpectrum, EmissionError> {
    cfg.validate()?;
    if cfg.xi == 0.0 {
        return Ok(HarmonicSpectrum { entries: Vec::new(), total: 0.0, tail_estimate: 0.0, converged: true });
    }
    let mut entries: Vec<(usize, f64)> = Vec::new();
    let mut total = 0.0;
    let mut small_run = 0;
    let mut next = 1;
    let mut stopped = false;
    while next <= cfg.s_max && !stopped {
        let end = (next + CHUNK - 1).min(cfg.s_max);
        let chunk: Vec<f64> =
            (next..=end).into_par_iter().map(|s| harmonic_probability(cfg, s)).collect::<Result<_, _>>()?;
        for (i, w) in chunk.into_iter().enumerate() {
            total += w;
            entries.push((next + i, w));
            small_run = if w < cfg.quad_tol * total { small_run + 1 } else { 0 };
            if small_run >= 3 {
                stopped = true;
                break;
            }
        }
        next = end + 1;
    }
    let tail_estimate = geometric_tail(&entries);
    let converged = tail_estimate <= cfg.tail_tol * total;
    Ok(HarmonicSpectrum { entries, total, tail_estimate, converged })
}

fn geometric_tail(entries: &[(usize, f64)]) -> f64 {
    match entries {
        [.., (_, a), (_, b)] if *a > 0.0 => {
            let r = b / a;
            if r < 1.0 {
                b * r / (1.0 - r)
            } else {
                f64::INFINITY
            }
        }
        [.., (_, b)] if *b == 0.0 => 0.0,
        _ => f64::INFINITY,
    }
}

/// Outcome of a photon emission from a node state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeStability {
    /// Longitudinal recoil `q′∥ = −l′∥`.
    pub recoil: f64,
    /// The outgoing state has `q′∥ ≠ 0` and cannot stay at the node.
    pub unstable: bool,
}

pub fn node_emission_stability(l_parallel: f64) -> NodeStability {
    let recoil = -l_parallel;
    NodeStability { recoil, unstable: recoil != 0.0 }
}
