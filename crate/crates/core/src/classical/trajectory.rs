//! Full trajectories from the analytic phases plus conservation laws.
//!
//! Time and longitudinal coordinates follow algebraically from the phases;
//! the transverse coordinates are quadratures of `p⊥(τ)`.

use super::delta::{delta_orbit, DeltaOrbit, Regime};
use super::node::{magnetic_node_orbit, MagneticNodeOrbit};
use super::{ClassicalError, ParticleState};
use crate::quad;
use crate::relkin::{check_on_shell, Background, FourVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitCase {
    /// `p_in` is the kinetic momentum at the origin, a magnetic node.
    MagneticNode,
    /// `p_in` is the free momentum before the particle enters the field.
    ZeroTransverse,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub case: OrbitCase,
    pub states: Vec<ParticleState>,
    /// `φ̄` for the node case, `φ_Δ` otherwise.
    pub phases: Vec<f64>,
    /// Fixed point: the particle never enters the field.
    pub at_rest: bool,
}

impl Trajectory {
    pub fn initial_state(&self) -> ParticleState {
        self.states[0]
    }
}

fn is_rest_case(bg: &Background, orbit: &DeltaOrbit) -> bool {
    let (x1, x2) = (bg.wave1.xi, bg.wave2.xi);
    orbit.kd_p == 0.0 && bg.equal_frequencies() && (x1 - x2).abs() <= 1e-12 * x1.max(x2)
}

pub fn reconstruct_trajectory(
    bg: &Background,
    p_in: &FourVector,
    case: OrbitCase,
    taus: &[f64],
) -> Result<Trajectory, ClassicalError> {
    check_on_shell(p_in)?;
    if taus.first() != Some(&0.0) || taus.windows(2).any(|w| w[1] <= w[0]) {
        return Err(ClassicalError::Precondition("proper-time grid must start at 0 and increase".into()));
    }
    match case {
        OrbitCase::MagneticNode => node_trajectory(bg, p_in, taus),
        OrbitCase::ZeroTransverse => {
            let orbit = delta_orbit(bg, p_in)?;
            if orbit.regime == Regime::Forbidden {
                if is_rest_case(bg, &orbit) {
                    return Ok(Trajectory {
                        case,
                        states: vec![ParticleState { tau: 0.0, x: FourVector::ZERO, p: *p_in }],
                        phases: vec![0.0],
                        at_rest: true,
                    });
                }
                return Err(ClassicalError::Forbidden { varpi2: orbit.varpi_delta2 });
            }
            delta_trajectory(bg, &orbit, taus)
        }
    }
}

fn accumulate_transverse<F>(taus: &[f64], p_perp: F) -> Result<Vec<[f64; 2]>, ClassicalError>
where
    F: Fn(f64) -> Result<[f64; 2], ClassicalError>,
{
    let mut out = vec![[0.0, 0.0]];
    let mut acc = [0.0, 0.0];
    for w in taus.windows(2) {
        for (c, slot) in acc.iter_mut().enumerate() {
            let f = |t: f64| p_perp(t).map(|v| v[c]).unwrap_or(f64::NAN);
            *slot += quad::integrate(f, w[0], w[1], 1e-13, 1e-13)
                .map_err(|e| ClassicalError::Precondition(e.to_string()))?;
        }
        if acc.iter().any(|v| !v.is_finite()) {
            // surface the underlying phase error
            p_perp(w[1])?;
            return Err(ClassicalError::Precondition("non-finite transverse coordinate".into()));
        }
        out.push(acc);
    }
    Ok(out)
}

fn node_trajectory(bg: &Background, p_in: &FourVector, taus: &[f64]) -> Result<Trajectory, ClassicalError> {
    if p_in.z().abs() > 1e-12 * p_in.t() {
        return Err(ClassicalError::Precondition("node trajectory needs p_z = 0 at z = 0".into()));
    }
    let a0 = bg.eval_potential(&FourVector::ZERO);
    let pi = *p_in + a0;
    let orbit: MagneticNodeOrbit = magnetic_node_orbit(bg, &pi)?;
    let tau_in = orbit.tau_at_phase(0.0)?;
    let phase = |tau: f64| orbit.phase(tau + tau_in);
    let p_perp = |tau: f64| -> Result<[f64; 2], ClassicalError> {
        let phi = phase(tau)?;
        let a = bg.potential_at_phases(phi, phi);
        Ok([pi.x() - a.x(), pi.y() - a.y()])
    };
    let xs = accumulate_transverse(taus, p_perp)?;
    let mut states = Vec::with_capacity(taus.len());
    let mut phases = Vec::with_capacity(taus.len());
    for (tau, xy) in taus.iter().zip(&xs) {
        let phi = phase(*tau)?;
        let pp = p_perp(*tau)?;
        states.push(ParticleState {
            tau: *tau,
            x: FourVector::new(phi / orbit.omega, xy[0], xy[1], 0.0),
            p: FourVector::on_shell(pp[0], pp[1], 0.0),
        });
        phases.push(phi);
    }
    Ok(Trajectory { case: OrbitCase::MagneticNode, states, phases, at_rest: false })
}

fn delta_trajectory(bg: &Background, orbit: &DeltaOrbit, taus: &[f64]) -> Result<Trajectory, ClassicalError> {
    let (w1, w2) = (bg.wave1.omega, bg.wave2.omega);
    let p_perp = |tau: f64| -> Result<[f64; 2], ClassicalError> {
        let (d, s) = orbit.phases(tau)?;
        let a = bg.potential_at_phases(0.5 * (s + d), 0.5 * (s - d));
        Ok([-a.x(), -a.y()])
    };
    let xs = accumulate_transverse(taus, p_perp)?;
    let mut states = Vec::with_capacity(taus.len());
    let mut phases = Vec::with_capacity(taus.len());
    for (tau, xy) in taus.iter().zip(&xs) {
        let (d, s) = orbit.phases(*tau)?;
        let (phi1, phi2) = (0.5 * (s + d), 0.5 * (s - d));
        let t = 0.5 * (phi1 / w1 + phi2 / w2);
        let z = 0.5 * (phi1 / w1 - phi2 / w2);
        let rate_d = orbit.rate(d);
        let plus = 0.5 * (orbit.ks_p + rate_d) / w1;
        let minus = 0.5 * (orbit.ks_p - rate_d) / w2;
        let a = bg.potential_at_phases(phi1, phi2);
        states.push(ParticleState {
            tau: *tau,
            x: FourVector::new(t, xy[0], xy[1], z),
            p: FourVector::new(0.5 * (plus + minus), -a.x(), -a.y(), 0.5 * (plus - minus)),
        });
        phases.push(d);
    }
    Ok(Trajectory { case: OrbitCase::ZeroTransverse, states, phases, at_rest: false })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize, end: f64) -> Vec<f64> {
        (0..=n).map(|i| end * i as f64 / n as f64).collect()
    }

    #[test]
    fn node_circle_for_zero_canonical_momentum() {
        let bg = Background::head_on(10.0, 10.0, 0.01, 0.01).unwrap();
        let a0 = bg.eval_potential(&FourVector::ZERO);
        let p = FourVector::on_shell(-a0.x(), -a0.y(), 0.0);
        let tr = reconstruct_trajectory(&bg, &p, OrbitCase::MagneticNode, &grid(200, 2000.0)).unwrap();
        // x⊥ = −(ξ/ϖ)(sin ϖτ, 1 − cos ϖτ)
        let r = 20.0 / (0.01 * 401f64.sqrt());
        let centre = [0.0, -r];
        for s in &tr.states {
            let d = (s.x.x() - centre[0]).hypot(s.x.y() - centre[1]);
            assert!((d - r).abs() < 1e-8 * r, "{d} vs {r}");
            assert!((s.p.square() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn free_particle_straight_line() {
        let bg = Background::head_on(0.0, 0.0, 0.01, 0.01).unwrap();
        let p = FourVector::on_shell(0.0, 0.0, 2.0);
        let tr = reconstruct_trajectory(&bg, &p, OrbitCase::ZeroTransverse, &grid(10, 10.0)).unwrap();
        for s in &tr.states {
            for i in 0..4 {
                assert!((s.x[i] - s.tau * p[i]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rest_is_a_fixed_point() {
        let bg = Background::head_on(10.0, 10.0, 0.01, 0.01).unwrap();
        let p = FourVector::new(1.0, 0.0, 0.0, 0.0);
        let tr = reconstruct_trajectory(&bg, &p, OrbitCase::ZeroTransverse, &grid(10, 10.0)).unwrap();
        assert!(tr.at_rest);
        assert_eq!(tr.states.len(), 1);
        let unequal = Background::head_on(10.0, 9.0, 0.01, 0.01).unwrap();
        assert!(matches!(
            reconstruct_trajectory(&unequal, &p, OrbitCase::ZeroTransverse, &grid(10, 10.0)),
            Err(ClassicalError::Forbidden { .. })
        ));
    }
}
