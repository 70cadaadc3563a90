//! Floquet analysis of `F'' + [λ − 2Q cos 2y] F = 0`.
//!
//! The characteristic exponent comes from the monodromy matrix over one
//! period `π`. Both fundamental solutions are carried in modified Prüfer
//! variables, `F = (r/√κ) sin θ`, `F' = r √κ cos θ`, so the amplitude is
//! integrated as `ln r` and exponential growth in deep gaps cannot overflow.
//! The accumulated angle fixes the integer part of `ν`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::SpecfunError;
use crate::ode::{self, OdeOptions};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MathieuSpec {
    pub lambda: f64,
    pub q: f64,
}

impl MathieuSpec {
    pub fn new(lambda: f64, q: f64) -> Self {
        MathieuSpec { lambda, q }
    }

    fn coefficient(&self, y: f64) -> f64 {
        self.lambda - 2.0 * self.q * (2.0 * y).cos()
    }
}

/// Characteristic exponent; solutions obey `F(y + π) = e^{iπν} F(y)`.
///
/// `nu_im ≥ 0`. In a gap `nu_re` is an integer whose parity gives the sign of
/// the multiplier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloquetExponent {
    pub nu_re: f64,
    pub nu_im: f64,
    pub is_band: bool,
}

impl FloquetExponent {
    pub fn nu(&self) -> Complex64 {
        Complex64::new(self.nu_re, self.nu_im)
    }

    /// Floquet multiplier `e^{iπν}`.
    pub fn multiplier(&self) -> Complex64 {
        (Complex64::i() * PI * self.nu()).exp()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MathieuOptions {
    pub rtol: f64,
    pub band_tol: f64,
}

impl Default for MathieuOptions {
    fn default() -> Self {
        MathieuOptions { rtol: 1e-12, band_tol: 1e-9 }
    }
}

/// Half trace of the monodromy matrix, kept as `sign · exp(ln_abs)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfTrace {
    pub sign: f64,
    pub ln_abs: f64,
    /// Total Prüfer angle of the solution starting at `F = 0`.
    pub turn: f64,
    /// Lower-left monodromy entry sign (scaled coordinates).
    pub lower_left: f64,
}

impl HalfTrace {
    pub fn value(&self) -> f64 {
        self.sign * self.ln_abs.exp()
    }
}

fn prufer_scale(spec: &MathieuSpec) -> f64 {
    let (l, q) = (spec.lambda, spec.q.abs());
    if l >= 1.0 && l > 2.0 * q {
        l.sqrt()
    } else {
        l.abs().max(1.0).max(2.0 * q).sqrt()
    }
}

pub fn monodromy_half_trace(spec: &MathieuSpec, opts: &MathieuOptions) -> Result<HalfTrace, SpecfunError> {
    if !(spec.lambda.is_finite() && spec.q.is_finite()) {
        return Err(SpecfunError::ParameterOutOfRange(spec.lambda));
    }
    let kappa = prufer_scale(spec);
    let s = *spec;
    // state: [ϑ_a, ln r_a, ϑ_b, ln r_b] with θ = κy + ϑ
    let rhs = move |y: f64, v: &[f64; 4], d: &mut [f64; 4]| {
        let qy = s.coefficient(y) / kappa;
        for i in [0, 2] {
            let (sn, cs) = (kappa * y + v[i]).sin_cos();
            d[i] = (qy - kappa) * sn * sn;
            d[i + 1] = (kappa - qy) * sn * cs;
        }
    };
    let odeopts = OdeOptions { rtol: opts.rtol, atol: opts.rtol, max_steps: 5_000_000 };
    let end = ode::step_to(&rhs, 0.0, PI, [0.0, 0.0, 0.5 * PI, 0.0], &odeopts)
        .map_err(|e| SpecfunError::NonConvergence(e.to_string()))?;
    let theta_a = kappa * PI + end[0];
    let theta_b = kappa * PI + end[2];
    let (la, lb) = (end[1], end[3]);
    let big = la.max(lb);
    let combo = (la - big).exp() * theta_a.cos() + (lb - big).exp() * theta_b.sin();
    let lower_left = theta_a.sin();
    Ok(HalfTrace {
        sign: if combo >= 0.0 { 1.0 } else { -1.0 },
        ln_abs: big + (0.5 * combo.abs()).ln(),
        turn: theta_a,
        lower_left,
    })
}

/// Characteristic exponent with the default options.
pub fn mathieu_nu(spec: &MathieuSpec) -> Result<FloquetExponent, SpecfunError> {
    mathieu_nu_with(spec, &MathieuOptions::default())
}

pub fn mathieu_nu_with(spec: &MathieuSpec, opts: &MathieuOptions) -> Result<FloquetExponent, SpecfunError> {
    let h = monodromy_half_trace(spec, opts)?;
    let delta = h.value();
    if delta.abs() < 1.0 {
        let acos = delta.acos();
        let alpha = if h.lower_left >= 0.0 { acos } else { 2.0 * PI - acos };
        let k = ((h.turn - alpha) / (2.0 * PI)).round();
        return Ok(FloquetExponent { nu_re: 2.0 * k + alpha / PI, nu_im: 0.0, is_band: true });
    }
    let nu_im = if h.ln_abs > 20.0 {
        (h.ln_abs + 2f64.ln()) / PI
    } else {
        delta.abs().acosh() / PI
    };
    let odd = h.sign < 0.0;
    let x = h.turn / PI;
    let nu_re = if odd { 2.0 * ((x - 1.0) / 2.0).round() + 1.0 } else { 2.0 * (x / 2.0).round() };
    Ok(FloquetExponent { nu_re, nu_im, is_band: nu_im < opts.band_tol })
}

/// `cos πν` from a truncated Hill determinant (orders `|r| ≤ order`).
///
/// Independent of the monodromy path; fails near `λ = 4r²`.
pub fn hill_half_trace(spec: &MathieuSpec, order: usize) -> f64 {
    let (l, q) = (spec.lambda, spec.q);
    let n = order as i64;
    let gamma = |r: i64| q / (4.0 * (r * r) as f64 - l);
    let mut d_prev = 1.0;
    let mut d = 1.0;
    for r in (-n + 1)..=n {
        let next = d - gamma(r) * gamma(r - 1) * d_prev;
        d_prev = d;
        d = next;
    }
    let s2 = if l >= 0.0 {
        (0.5 * PI * l.sqrt()).sin().powi(2)
    } else {
        -(0.5 * PI * (-l).sqrt()).sinh().powi(2)
    };
    1.0 - 2.0 * d * s2
}

/// Dense numerical solution of the canonical equation.
#[derive(Debug, Clone, PartialEq)]
pub struct MathieuSolution {
    pub spec: MathieuSpec,
    pub ys: Vec<f64>,
    pub values: Vec<f64>,
    pub derivs: Vec<f64>,
}

impl MathieuSolution {
    /// Quintic Hermite interpolation using `F`, `F'` and `F'' = −qF`.
    pub fn eval(&self, y: f64) -> Option<(f64, f64)> {
        let n = self.ys.len();
        if n < 2 || y < self.ys[0] || y > self.ys[n - 1] {
            return None;
        }
        let i = match self.ys.partition_point(|&v| v <= y) {
            0 => 0,
            k if k >= n => n - 2,
            k => k - 1,
        };
        let (y0, y1) = (self.ys[i], self.ys[i + 1]);
        let h = y1 - y0;
        let t = (y - y0) / h;
        let (f0, f1) = (self.values[i], self.values[i + 1]);
        let (d0, d1) = (self.derivs[i] * h, self.derivs[i + 1] * h);
        let (s0, s1) = (
            -self.spec.coefficient(y0) * f0 * h * h,
            -self.spec.coefficient(y1) * f1 * h * h,
        );
        let t2 = t * t;
        let t3 = t2 * t;
        let t4 = t3 * t;
        let t5 = t4 * t;
        let h0 = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5;
        let h1 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5;
        let h2 = 0.5 * (t2 - 3.0 * t3 + 3.0 * t4 - t5);
        let h3 = 0.5 * (t3 - 2.0 * t4 + t5);
        let h4 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5;
        let h5 = 10.0 * t3 - 15.0 * t4 + 6.0 * t5;
        let value = h0 * f0 + h1 * d0 + h2 * s0 + h3 * s1 + h4 * d1 + h5 * f1;
        let dh0 = -30.0 * t2 + 60.0 * t3 - 30.0 * t4;
        let dh1 = 1.0 - 18.0 * t2 + 32.0 * t3 - 15.0 * t4;
        let dh2 = 0.5 * (2.0 * t - 9.0 * t2 + 12.0 * t3 - 5.0 * t4);
        let dh3 = 0.5 * (3.0 * t2 - 8.0 * t3 + 5.0 * t4);
        let dh4 = -12.0 * t2 + 28.0 * t3 - 15.0 * t4;
        let dh5 = 30.0 * t2 - 60.0 * t3 + 30.0 * t4;
        let deriv = (dh0 * f0 + dh1 * d0 + dh2 * s0 + dh3 * s1 + dh4 * d1 + dh5 * f1) / h;
        Some((value, deriv))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub tol: f64,
    /// Number of stored nodes over `[y0, y1]`.
    pub nodes: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { tol: 1e-10, nodes: 2001 }
    }
}

pub fn solve_mathieu(
    spec: &MathieuSpec,
    y0: f64,
    y1: f64,
    init: (f64, f64),
    opts: &SolveOptions,
) -> Result<MathieuSolution, SpecfunError> {
    if !(y1 > y0) || opts.nodes < 2 || !(opts.tol > 0.0) {
        return Err(SpecfunError::InvalidInterval { y0, y1 });
    }
    let s = *spec;
    let rhs = move |y: f64, v: &[f64; 2], d: &mut [f64; 2]| {
        d[0] = v[1];
        d[1] = -s.coefficient(y) * v[0];
    };
    let n = opts.nodes;
    let ys: Vec<f64> = (0..n).map(|i| y0 + (y1 - y0) * i as f64 / (n - 1) as f64).collect();
    let odeopts = OdeOptions { rtol: opts.tol, atol: opts.tol, max_steps: 5_000_000 };
    let states = ode::sample(&rhs, &ys, [init.0, init.1], &odeopts)
        .map_err(|e| SpecfunError::NonConvergence(e.to_string()))?;
    Ok(MathieuSolution {
        spec: *spec,
        values: states.iter().map(|v| v[0]).collect(),
        derivs: states.iter().map(|v| v[1]).collect(),
        ys,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu(l: f64, q: f64) -> FloquetExponent {
        mathieu_nu(&MathieuSpec::new(l, q)).unwrap()
    }

    #[test]
    fn free_equation() {
        for l in [0.04, 0.81, 2.0, 4.0, 17.3, 1234.5] {
            let f = nu(l, 0.0);
            assert!(f.is_band);
            assert!((f.nu_re - l.sqrt()).abs() < 1e-9, "λ={l} ν={}", f.nu_re);
        }
        let f = nu(-3.0, 0.0);
        assert!(!f.is_band);
        assert_eq!(f.nu_re, 0.0);
        assert!((f.nu_im - 3f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn first_tongue_is_a_gap() {
        let f = nu(1.0, 0.5);
        assert!(!f.is_band && f.nu_im > 0.01);
        assert_eq!(f.nu_re, 1.0);
    }

    #[test]
    fn symmetric_in_q() {
        let a = nu(2.3, 0.7);
        let b = nu(2.3, -0.7);
        assert!((a.nu_re - b.nu_re).abs() < 1e-9 && (a.nu_im - b.nu_im).abs() < 1e-9);
    }

    #[test]
    fn agrees_with_hill_determinant() {
        for &(l, q) in &[(2.3, 0.7), (1.0, 0.5), (7.1, 3.0), (-0.2, 0.4), (30.0, 12.0), (-5.0, 8.0)] {
            let h = monodromy_half_trace(&MathieuSpec::new(l, q), &MathieuOptions::default()).unwrap();
            let hill = hill_half_trace(&MathieuSpec::new(l, q), 4000);
            assert!((h.value() - hill).abs() < 1e-8 * hill.abs().max(1.0), "({l},{q}) {} {}", h.value(), hill);
        }
    }

    #[test]
    fn cosine_solution() {
        let sol = solve_mathieu(&MathieuSpec::new(1.0, 0.0), 0.0, 10.0, (1.0, 0.0), &SolveOptions::default()).unwrap();
        for i in 0..=96 {
            let y = 0.1031 * i as f64;
            let (v, d) = sol.eval(y).unwrap();
            assert!((v - y.cos()).abs() < 1e-9 && (d + y.sin()).abs() < 1e-9, "y={y}");
        }
        assert!(sol.eval(10.5).is_none());
    }

    #[test]
    fn bad_interval() {
        assert!(solve_mathieu(&MathieuSpec::new(1.0, 0.0), 1.0, 1.0, (1.0, 0.0), &SolveOptions::default()).is_err());
    }
}
