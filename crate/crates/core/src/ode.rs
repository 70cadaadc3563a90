//! Thin adapter over the Dormand–Prince 5(4) integrator from `ode_solvers`.

use ode_solvers::dopri5::Dopri5;
use ode_solvers::dop_shared::{IntegrationError, OutputType, System};
use ode_solvers::SVector;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OdeError {
    #[error("integration failed at t = {t}: {reason}")]
    Failed { t: f64, reason: String, last: Vec<f64> },
    #[error("output grid must be strictly increasing")]
    BadGrid,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: u32,
}

impl Default for OdeOptions {
    fn default() -> Self {
        OdeOptions { rtol: 1e-10, atol: 1e-12, max_steps: 2_000_000 }
    }
}

struct Closure<F>(F);

impl<const N: usize, F> System<f64, SVector<f64, N>> for Closure<F>
where
    F: Fn(f64, &[f64; N], &mut [f64; N]),
{
    fn system(&self, t: f64, y: &SVector<f64, N>, dy: &mut SVector<f64, N>) {
        let yy: [f64; N] = std::array::from_fn(|i| y[i]);
        let mut d = [0.0; N];
        (self.0)(t, &yy, &mut d);
        for i in 0..N {
            dy[i] = d[i];
        }
    }
}

/// Advances `y` from `t0` to `t1`.
pub fn step_to<const N: usize, F>(
    f: &F,
    t0: f64,
    t1: f64,
    y: [f64; N],
    opts: &OdeOptions,
) -> Result<[f64; N], OdeError>
where
    F: Fn(f64, &[f64; N], &mut [f64; N]),
{
    if t1 == t0 {
        return Ok(y);
    }
    let span = t1 - t0;
    let mut solver = Dopri5::from_param(
        Closure(f),
        t0,
        t1,
        span,
        SVector::<f64, N>::from(y),
        opts.rtol,
        opts.atol,
        0.9,
        0.04,
        0.2,
        10.0,
        span.abs(),
        0.0,
        opts.max_steps,
        u32::MAX,
        OutputType::Sparse,
    );
    let res = solver.integrate();
    let last = solver.y_out().last().map(|v| v.iter().copied().collect()).unwrap_or_else(|| y.to_vec());
    match res {
        Ok(_) => {
            let v = solver.y_out().last().ok_or(OdeError::Failed {
                t: t0,
                reason: "no output".into(),
                last: y.to_vec(),
            })?;
            Ok(std::array::from_fn(|i| v[i]))
        }
        Err(e) => {
            let (t, reason) = match e {
                IntegrationError::MaxNumStepReached { x, .. } => (x, "maximum number of steps reached"),
                IntegrationError::StepSizeUnderflow { x } => (x, "step size underflow"),
                IntegrationError::StiffnessDetected { x } => (x, "stiffness detected"),
            };
            Err(OdeError::Failed { t, reason: reason.into(), last })
        }
    }
}

/// Solution sampled at each point of the increasing grid `ts`; `y0` is the
/// state at `ts[0]`.
pub fn sample<const N: usize, F>(
    f: &F,
    ts: &[f64],
    y0: [f64; N],
    opts: &OdeOptions,
) -> Result<Vec<[f64; N]>, OdeError>
where
    F: Fn(f64, &[f64; N], &mut [f64; N]),
{
    if ts.windows(2).any(|w| w[1] <= w[0]) {
        return Err(OdeError::BadGrid);
    }
    let mut out = Vec::with_capacity(ts.len());
    let mut y = y0;
    if !ts.is_empty() {
        out.push(y);
    }
    for w in ts.windows(2) {
        y = step_to(f, w[0], w[1], y, opts)?;
        out.push(y);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_oscillator() {
        let f = |_t: f64, y: &[f64; 2], d: &mut [f64; 2]| {
            d[0] = y[1];
            d[1] = -y[0];
        };
        let ts: Vec<f64> = (0..=20).map(|i| 0.5 * i as f64).collect();
        let ys = sample(&f, &ts, [1.0, 0.0], &OdeOptions::default()).unwrap();
        for (t, y) in ts.iter().zip(&ys) {
            assert!((y[0] - t.cos()).abs() < 1e-9);
        }
    }

    #[test]
    fn reports_step_limit() {
        let f = |_t: f64, y: &[f64; 1], d: &mut [f64; 1]| d[0] = y[0];
        let opts = OdeOptions { max_steps: 3, ..Default::default() };
        assert!(matches!(step_to(&f, 0.0, 50.0, [1.0], &opts), Err(OdeError::Failed { .. })));
    }
}
