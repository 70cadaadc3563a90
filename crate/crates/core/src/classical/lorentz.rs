use super::{ClassicalError, ParticleState};
use crate::ode::{self, OdeError, OdeOptions};
use crate::relkin::{check_on_shell, Background, FourVector};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzOptions {
    pub rtol: f64,
    pub atol: f64,
    /// Largest tolerated `|p·p − 1|/max(1, (p⁰)²)` along the trajectory.
    pub shell_tol: f64,
}

impl Default for LorentzOptions {
    fn default() -> Self {
        LorentzOptions { rtol: 1e-12, atol: 1e-12, shell_tol: 1e-9 }
    }
}

impl LorentzOptions {
    pub fn with_tol(tol: f64) -> Self {
        LorentzOptions { rtol: tol, atol: tol, shell_tol: 1e-9f64.max(100.0 * tol) }
    }
}

fn rhs(bg: &Background) -> impl Fn(f64, &[f64; 8], &mut [f64; 8]) + '_ {
    let waves = [(bg.wave1, bg.wave1.k()), (bg.wave2, bg.wave2.k())];
    move |_tau, s, d| {
        let x = FourVector([s[0], s[1], s[2], s[3]]);
        let p = FourVector([s[4], s[5], s[6], s[7]]);
        let mut dp = FourVector::ZERO;
        for (w, k) in &waves {
            if w.xi == 0.0 {
                continue;
            }
            let ap = w.potential_prime(k.dot(&x));
            dp = dp + ap.dot(&p) * *k - k.dot(&p) * ap;
        }
        d[..4].copy_from_slice(&p.0);
        d[4..].copy_from_slice(&dp.0);
    }
}

fn pack(s: &ParticleState) -> [f64; 8] {
    let mut v = [0.0; 8];
    v[..4].copy_from_slice(&s.x.0);
    v[4..].copy_from_slice(&s.p.0);
    v
}

fn unpack(tau: f64, v: &[f64]) -> ParticleState {
    ParticleState {
        tau,
        x: FourVector([v[0], v[1], v[2], v[3]]),
        p: FourVector([v[4], v[5], v[6], v[7]]),
    }
}

/// Integrates `ẋ = p`, `ṗ^μ = eF^{μν} p_ν` and samples at each `τ` of the
/// increasing grid `taus` (the first entry must equal `init.tau`).
pub fn integrate_lorentz_on(
    bg: &Background,
    init: &ParticleState,
    taus: &[f64],
    opts: &LorentzOptions,
) -> Result<Vec<ParticleState>, ClassicalError> {
    check_on_shell(&init.p)?;
    if taus.first() != Some(&init.tau) {
        return Err(ClassicalError::Precondition("grid must start at the initial proper time".into()));
    }
    let f = rhs(bg);
    let odeopts = OdeOptions { rtol: opts.rtol, atol: opts.atol, max_steps: 10_000_000 };
    let mut out = Vec::with_capacity(taus.len());
    let mut y = pack(init);
    out.push(*init);
    for w in taus.windows(2) {
        if w[1] <= w[0] {
            return Err(ClassicalError::Precondition("proper-time grid must increase".into()));
        }
        y = match ode::step_to(&f, w[0], w[1], y, &odeopts) {
            Ok(v) => v,
            Err(OdeError::Failed { reason, .. }) => {
                return Err(ClassicalError::Integration { reason, last: unpack(w[0], &y) })
            }
            Err(e) => return Err(ClassicalError::Precondition(e.to_string())),
        };
        let s = unpack(w[1], &y);
        let drift = (s.p.square() - 1.0).abs() / s.p.t().powi(2).max(1.0);
        if drift > opts.shell_tol {
            return Err(ClassicalError::Drift { drift, tol: opts.shell_tol });
        }
        out.push(s);
    }
    Ok(out)
}

/// Uniformly sampled Lorentz trajectory over `[init.tau, init.tau + tau_end]`
/// with 1001 points.
pub fn integrate_lorentz(
    bg: &Background,
    init: &ParticleState,
    tau_end: f64,
    tol: f64,
) -> Result<Vec<ParticleState>, ClassicalError> {
    if !(tau_end > 0.0) || !(tol > 0.0) {
        return Err(ClassicalError::Precondition("tau_end and tol must be positive".into()));
    }
    let n = 1000;
    let taus: Vec<f64> = (0..=n).map(|i| init.tau + tau_end * i as f64 / n as f64).collect();
    integrate_lorentz_on(bg, init, &taus, &LorentzOptions::with_tol(tol))
}

pub fn canonical_momentum(bg: &Background, state: &ParticleState) -> FourVector {
    state.p + bg.eval_potential(&state.x)
}

/// `e_{l,j}·Π`, conserved along every trajectory.
pub fn conserved_transverse(
    bg: &Background,
    state: &ParticleState,
    l: usize,
    j: usize,
) -> Result<f64, ClassicalError> {
    if !(1..=2).contains(&l) || !(1..=2).contains(&j) {
        return Err(ClassicalError::Precondition("wave and polarisation indices are 1 or 2".into()));
    }
    Ok(bg.e_basis(l, j)?.dot(&canonical_momentum(bg, state)))
}

/// `2(k₁·Π)(k₂·Π) − (k₁·k₂)Π²`, conserved along every trajectory.
pub fn conserved_longitudinal(bg: &Background, state: &ParticleState) -> Result<f64, ClassicalError> {
    let (k1, k2) = (bg.k1(), bg.k2());
    let k12 = k1.dot(&k2);
    if k12.abs() < 1e-300 {
        return Err(crate::relkin::RelkinError::DegenerateGeometry.into());
    }
    let pi = canonical_momentum(bg, state);
    Ok(2.0 * k1.dot(&pi) * k2.dot(&pi) - k12 * pi.square())
}
