//! Minkowski kinematics and the two-wave background.
//!
//! Units: ħ = c = m = 1. Metric signature (+,−,−,−).
//!
//! Head-on geometry: wave 1 travels towards −z and wave 2 towards +z, so
//! `φ₁ = ω₁(t + z)`, `φ₂ = ω₂(t − z)` and for equal frequencies
//! `φ_Δ = 2ωz`. Both waves share the transverse basis `ε₁ = x̂`, `ε₂ = ŷ`.

use std::ops::{Add, Index, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RelkinError {
    #[error("invalid plane wave: {0}")]
    InvalidWave(String),
    #[error("momentum is off shell: p·p = {0}")]
    OffShell(f64),
    #[error("degenerate geometry: k1·k2 = 0")]
    DegenerateGeometry,
}

/// Contravariant 4-vector `(t, x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const ZERO: FourVector = FourVector([0.0; 4]);

    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector([t, x, y, z])
    }

    /// Spatial vector embedded with zero time component.
    pub const fn spatial(v: [f64; 3]) -> Self {
        FourVector([0.0, v[0], v[1], v[2]])
    }

    /// On-shell momentum with the given spatial part.
    pub fn on_shell(px: f64, py: f64, pz: f64) -> Self {
        FourVector([(1.0 + px * px + py * py + pz * pz).sqrt(), px, py, pz])
    }

    pub fn t(&self) -> f64 {
        self.0[0]
    }
    pub fn x(&self) -> f64 {
        self.0[1]
    }
    pub fn y(&self) -> f64 {
        self.0[2]
    }
    pub fn z(&self) -> f64 {
        self.0[3]
    }

    pub fn dot(&self, o: &FourVector) -> f64 {
        let (a, b) = (&self.0, &o.0);
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
    }

    pub fn square(&self) -> f64 {
        self.dot(self)
    }

    /// Euclidean norm of the transverse (x, y) part.
    pub fn transverse_norm(&self) -> f64 {
        self.0[1].hypot(self.0[2])
    }

    /// Covariant components `x_μ = g_μν x^ν`.
    pub fn lower(&self) -> [f64; 4] {
        [self.0[0], -self.0[1], -self.0[2], -self.0[3]]
    }

    /// Boost with velocity `beta` (|beta| < 1) along the unit spatial axis `n`.
    pub fn boost(&self, n: [f64; 3], beta: f64) -> FourVector {
        let gamma = 1.0 / (1.0 - beta * beta).sqrt();
        let v = self.0;
        let par = v[1] * n[0] + v[2] * n[1] + v[3] * n[2];
        let t = gamma * (v[0] - beta * par);
        let par_new = gamma * (par - beta * v[0]);
        let d = par_new - par;
        FourVector([t, v[1] + d * n[0], v[2] + d * n[1], v[3] + d * n[2]])
    }

    /// Rotation by `angle` about the z axis.
    pub fn rotate_z(&self, angle: f64) -> FourVector {
        let (s, c) = angle.sin_cos();
        let v = self.0;
        FourVector([v[0], c * v[1] - s * v[2], s * v[1] + c * v[2], v[3]])
    }
}

impl Index<usize> for FourVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector(self.0.map(|c| -c))
    }
}

impl Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, v: FourVector) -> FourVector {
        FourVector(v.0.map(|c| self * c))
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, s: f64) -> FourVector {
        s * self
    }
}

/// Circularly polarised plane wave `a(φ) = ξ[ε₁ cos φ + ε₂ sin φ]`, `φ = k·x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave {
    pub xi: f64,
    pub omega: f64,
    pub dir: [f64; 3],
    pub eps1: FourVector,
    pub eps2: FourVector,
}

impl PlaneWave {
    /// Validates that `dir` is a unit vector and `eps1`, `eps2` are an
    /// orthonormal pair transverse to it.
    pub fn new(
        xi: f64,
        omega: f64,
        dir: [f64; 3],
        eps1: [f64; 3],
        eps2: [f64; 3],
    ) -> Result<Self, RelkinError> {
        let dot3 = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        let tol = 1e-12;
        if !(xi.is_finite() && xi >= 0.0) {
            return Err(RelkinError::InvalidWave(format!("xi must be finite and >= 0, got {xi}")));
        }
        if !(omega.is_finite() && omega > 0.0) {
            return Err(RelkinError::InvalidWave(format!("omega must be > 0, got {omega}")));
        }
        if (dot3(dir, dir) - 1.0).abs() > tol
            || (dot3(eps1, eps1) - 1.0).abs() > tol
            || (dot3(eps2, eps2) - 1.0).abs() > tol
        {
            return Err(RelkinError::InvalidWave("direction and polarisations must be unit vectors".into()));
        }
        if dot3(dir, eps1).abs() > tol || dot3(dir, eps2).abs() > tol || dot3(eps1, eps2).abs() > tol {
            return Err(RelkinError::InvalidWave("polarisations must be orthogonal to each other and to the direction".into()));
        }
        Ok(PlaneWave {
            xi,
            omega,
            dir,
            eps1: FourVector::spatial(eps1),
            eps2: FourVector::spatial(eps2),
        })
    }

    pub fn k(&self) -> FourVector {
        let w = self.omega;
        FourVector([w, w * self.dir[0], w * self.dir[1], w * self.dir[2]])
    }

    pub fn phase(&self, x: &FourVector) -> f64 {
        self.k().dot(x)
    }

    pub fn potential(&self, phi: f64) -> FourVector {
        let (s, c) = phi.sin_cos();
        self.xi * (c * self.eps1 + s * self.eps2)
    }

    /// `da/dφ`.
    pub fn potential_prime(&self, phi: f64) -> FourVector {
        let (s, c) = phi.sin_cos();
        self.xi * (c * self.eps2 - s * self.eps1)
    }

    /// Same wave with a different intensity.
    pub fn with_xi(mut self, xi: f64) -> Self {
        self.xi = xi;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseVariables {
    pub phi1: f64,
    pub phi2: f64,
    pub delta: f64,
    pub sigma: f64,
    pub bar: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Background {
    pub wave1: PlaneWave,
    pub wave2: PlaneWave,
}

const X_HAT: [f64; 3] = [1.0, 0.0, 0.0];
const Y_HAT: [f64; 3] = [0.0, 1.0, 0.0];

impl Background {
    pub fn new(wave1: PlaneWave, wave2: PlaneWave) -> Self {
        Background { wave1, wave2 }
    }

    /// Counter-propagating pair along z with the shared basis (x̂, ŷ).
    pub fn head_on(xi1: f64, xi2: f64, omega1: f64, omega2: f64) -> Result<Self, RelkinError> {
        Ok(Background {
            wave1: PlaneWave::new(xi1, omega1, [0.0, 0.0, -1.0], X_HAT, Y_HAT)?,
            wave2: PlaneWave::new(xi2, omega2, [0.0, 0.0, 1.0], X_HAT, Y_HAT)?,
        })
    }

    /// Wave 1 alone (wave 2 present with zero amplitude).
    pub fn single(xi: f64, omega: f64) -> Result<Self, RelkinError> {
        Self::head_on(xi, 0.0, omega, omega)
    }

    pub fn k1(&self) -> FourVector {
        self.wave1.k()
    }
    pub fn k2(&self) -> FourVector {
        self.wave2.k()
    }
    pub fn k_delta(&self) -> FourVector {
        self.k1() - self.k2()
    }
    pub fn k_sigma(&self) -> FourVector {
        self.k1() + self.k2()
    }
    pub fn k_bar(&self) -> FourVector {
        0.5 * self.k_sigma()
    }
    pub fn xi_sigma(&self) -> f64 {
        self.wave1.xi + self.wave2.xi
    }

    pub fn is_head_on(&self) -> bool {
        let d1 = self.wave1.dir;
        let d2 = self.wave2.dir;
        (0..3).all(|i| (d1[i] + d2[i]).abs() < 1e-12)
    }

    pub fn shares_polarisation_basis(&self) -> bool {
        let close = |a: &FourVector, b: &FourVector| (0..4).all(|i| (a[i] - b[i]).abs() < 1e-12);
        close(&self.wave1.eps1, &self.wave2.eps1) && close(&self.wave1.eps2, &self.wave2.eps2)
    }

    pub fn equal_frequencies(&self) -> bool {
        (self.wave1.omega - self.wave2.omega).abs() <= 1e-14 * self.wave1.omega.max(self.wave2.omega)
    }

    pub fn phase_variables(&self, x: &FourVector) -> PhaseVariables {
        let phi1 = self.wave1.phase(x);
        let phi2 = self.wave2.phase(x);
        PhaseVariables {
            phi1,
            phi2,
            delta: phi1 - phi2,
            sigma: phi1 + phi2,
            bar: self.k_bar().dot(x),
        }
    }

    pub fn potential_at_phases(&self, phi1: f64, phi2: f64) -> FourVector {
        self.wave1.potential(phi1) + self.wave2.potential(phi2)
    }

    pub fn eval_potential(&self, x: &FourVector) -> FourVector {
        self.potential_at_phases(self.wave1.phase(x), self.wave2.phase(x))
    }

    /// `eF^{μν} = Σ_l (k_l^μ a_l'^ν − k_l^ν a_l'^μ)`, contravariant.
    pub fn field_tensor(&self, x: &FourVector) -> [[f64; 4]; 4] {
        let mut f = [[0.0; 4]; 4];
        for w in [&self.wave1, &self.wave2] {
            let k = w.k();
            let ap = w.potential_prime(w.phase(x));
            for mu in 0..4 {
                for nu in 0..4 {
                    f[mu][nu] += k[mu] * ap[nu] - k[nu] * ap[mu];
                }
            }
        }
        f
    }

    /// Transverse basis `e_{l,j}` orthogonal to both wavevectors.
    pub fn e_basis(&self, l: usize, j: usize) -> Result<FourVector, RelkinError> {
        let (k1, k2) = (self.k1(), self.k2());
        let k12 = k1.dot(&k2);
        if k12.abs() < 1e-300 {
            return Err(RelkinError::DegenerateGeometry);
        }
        let w = if l == 1 { &self.wave1 } else { &self.wave2 };
        let eps = if j == 1 { w.eps1 } else { w.eps2 };
        Ok(eps - (eps.dot(&k2) / k12) * k1 - (eps.dot(&k1) / k12) * k2)
    }

    pub fn relativistic_invariants(
        &self,
        p: &FourVector,
        x: &FourVector,
    ) -> Result<InvariantSet, RelkinError> {
        check_on_shell(p)?;
        let f = self.field_tensor(x);
        let e = [f[1][0], f[2][0], f[3][0]];
        let b = [-f[2][3], -f[3][1], -f[1][2]];
        let e2 = e.iter().map(|v| v * v).sum::<f64>();
        let b2 = b.iter().map(|v| v * v).sum::<f64>();
        let eb = e[0] * b[0] + e[1] * b[1] + e[2] * b[2];
        let a = self.eval_potential(x);
        let eta = self.k_bar().dot(p);
        let cal_f = 0.5 * (e2 - b2);
        Ok(InvariantSet {
            xi: (-a.square()).max(0.0).sqrt(),
            eta,
            cal_f,
            cal_g: eb,
            ratio: cal_f / (eta * eta),
        })
    }
}

/// Local field invariants. `eta` uses the mean wavevector `k̄`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantSet {
    pub xi: f64,
    pub eta: f64,
    pub cal_f: f64,
    pub cal_g: f64,
    /// `𝓕/η²`; the plane-wave picture needs this small.
    pub ratio: f64,
}

impl InvariantSet {
    pub fn plane_wave_like(&self, threshold: f64) -> bool {
        self.ratio.abs() < threshold
    }
}

pub fn check_on_shell(p: &FourVector) -> Result<(), RelkinError> {
    let p2 = p.square();
    if (p2 - 1.0).abs() > 1e-9 * p[0].abs().max(1.0).powi(2) {
        return Err(RelkinError::OffShell(p2));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bg() -> Background {
        Background::head_on(10.0, 10.0, 0.01, 0.01).unwrap()
    }

    #[test]
    fn metric_signature() {
        let et = FourVector::new(1.0, 0.0, 0.0, 0.0);
        let ez = FourVector::new(0.0, 0.0, 0.0, 1.0);
        assert_eq!(et.dot(&et), 1.0);
        assert_eq!(ez.dot(&ez), -1.0);
    }

    #[test]
    fn boost_and_rotation_preserve_square() {
        let v = FourVector::new(3.0, 0.4, -1.2, 2.2);
        let n = [0.6, 0.0, 0.8];
        let b = v.boost(n, 0.73).rotate_z(1.1);
        assert!((b.square() - v.square()).abs() < 1e-12);
    }

    #[test]
    fn wave_is_null_and_transverse() {
        let b = bg();
        for w in [&b.wave1, &b.wave2] {
            let k = w.k();
            assert_eq!(k.square(), 0.0);
            assert_eq!(k.dot(&w.eps1), 0.0);
            assert_eq!(w.eps1.dot(&w.eps1), -1.0);
            assert_eq!(w.eps1.dot(&w.eps2), 0.0);
        }
    }

    #[test]
    fn rejects_bad_polarisation() {
        assert!(PlaneWave::new(1.0, 1.0, [0.0, 0.0, 1.0], [0.0, 0.0, 1.0], Y_HAT).is_err());
        assert!(PlaneWave::new(1.0, -1.0, [0.0, 0.0, 1.0], X_HAT, Y_HAT).is_err());
    }

    #[test]
    fn derived_wavevectors() {
        let b = bg();
        let kd = b.k_delta();
        assert_eq!(kd.t(), 0.0);
        assert!(kd.square() < 0.0);
        assert_eq!(b.k_bar(), FourVector::new(0.01, 0.0, 0.0, 0.0));
        assert_eq!(b.xi_sigma(), 20.0);
    }

    #[test]
    fn potential_examples() {
        let b = Background::single(3.0, 0.5).unwrap();
        assert_eq!(b.eval_potential(&FourVector::ZERO), 3.0 * b.wave1.eps1);

        let b = bg();
        let a0 = b.eval_potential(&FourVector::new(0.7, 0.0, 0.0, 0.0));
        assert!((a0.square() + 400.0).abs() < 1e-9);
        let node = FourVector::new(0.0, 0.0, 0.0, std::f64::consts::FRAC_PI_2 / 0.01);
        assert!(b.eval_potential(&node).square().abs() < 1e-9);
    }

    #[test]
    fn a_squared_formula_on_grid() {
        let b = Background::head_on(2.0, 0.7, 0.3, 0.3).unwrap();
        for i in 0..50 {
            let x = FourVector::new(0.37 * i as f64, 0.1, -0.4, 1.3 - 0.21 * i as f64);
            let pv = b.phase_variables(&x);
            let a = b.eval_potential(&x);
            let expect = 2.7f64.powi(2) - 4.0 * 2.0 * 0.7 * (pv.delta / 2.0).sin().powi(2);
            assert!((-a.square() - expect).abs() < 1e-9);
            for w in [&b.wave1, &b.wave2] {
                let al = w.potential(w.phase(&x));
                assert!(w.k().dot(&al).abs() < 1e-12);
                assert!((al.square() + w.xi * w.xi).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn phase_examples() {
        let b = bg();
        let pv = b.phase_variables(&FourVector::ZERO);
        assert_eq!((pv.phi1, pv.phi2, pv.delta, pv.sigma, pv.bar), (0.0, 0.0, 0.0, 0.0, 0.0));
        let pv = b.phase_variables(&FourVector::new(3.0, 0.0, 0.0, 0.0));
        assert!((pv.phi1 - 0.03).abs() < 1e-15 && pv.delta == 0.0 && (pv.bar - 0.03).abs() < 1e-15);
        let pv = b.phase_variables(&FourVector::new(0.0, 0.0, 0.0, std::f64::consts::PI / 0.01));
        assert!((pv.delta - 2.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn e_basis_orthogonal_to_both_wavevectors() {
        let b = Background::head_on(1.0, 2.0, 0.2, 0.7).unwrap();
        for l in 1..=2 {
            for j in 1..=2 {
                let e = b.e_basis(l, j).unwrap();
                assert!(e.dot(&b.k1()).abs() < 1e-15);
                assert!(e.dot(&b.k2()).abs() < 1e-15);
            }
        }
        let parallel = Background::new(b.wave1, b.wave1);
        assert_eq!(parallel.e_basis(1, 1), Err(RelkinError::DegenerateGeometry));
    }

    /// Field tensor from central differences of the potential.
    fn fd_field_tensor(b: &Background, x: &FourVector) -> [[f64; 4]; 4] {
        let h = 1e-4;
        let mut d = [[0.0; 4]; 4];
        for alpha in 0..4 {
            let mut xp = *x;
            let mut xm = *x;
            xp.0[alpha] += h;
            xm.0[alpha] -= h;
            let ap = b.eval_potential(&xp);
            let am = b.eval_potential(&xm);
            for nu in 0..4 {
                d[alpha][nu] = (ap[nu] - am[nu]) / (2.0 * h);
            }
        }
        let g = [1.0, -1.0, -1.0, -1.0];
        let mut f = [[0.0; 4]; 4];
        for mu in 0..4 {
            for nu in 0..4 {
                f[mu][nu] = g[mu] * d[mu][nu] - g[nu] * d[nu][mu];
            }
        }
        f
    }

    #[test]
    fn field_tensor_matches_finite_difference() {
        let b = Background::head_on(1.5, 0.8, 0.9, 0.6).unwrap();
        let x = FourVector::new(0.3, 0.2, -0.1, 0.7);
        let fa = b.field_tensor(&x);
        let fd = fd_field_tensor(&b, &x);
        for mu in 0..4 {
            for nu in 0..4 {
                assert!((fa[mu][nu] - fd[mu][nu]).abs() < 1e-7, "{mu}{nu}");
            }
        }
    }

    #[test]
    fn invariants() {
        let p = FourVector::on_shell(0.3, -0.2, 1.1);
        let single = Background::single(2.0, 0.4).unwrap();
        for z in [0.0, 0.3, 1.7] {
            let inv = single.relativistic_invariants(&p, &FourVector::new(0.2, 0.0, 0.0, z)).unwrap();
            assert!(inv.cal_f.abs() < 1e-14 && inv.cal_g.abs() < 1e-14);
        }
        let b = bg();
        let node = FourVector::new(0.0, 0.0, 0.0, 0.0);
        let inv = b.relativistic_invariants(&FourVector::new(1.0, 0.0, 0.0, 0.0), &node).unwrap();
        assert!(inv.cal_f > 0.0);
        assert!((inv.eta - 0.01).abs() < 1e-16);
        // 𝓕 from the finite-difference tensor
        let f = fd_field_tensor(&b, &node);
        let e2: f64 = (1..4).map(|i| f[i][0] * f[i][0]).sum();
        let b2 = f[2][3].powi(2) + f[3][1].powi(2) + f[1][2].powi(2);
        assert!((0.5 * (e2 - b2) - inv.cal_f).abs() < 1e-6 * inv.cal_f);
        assert!(b.relativistic_invariants(&FourVector::new(2.0, 0.0, 0.0, 0.0), &node).is_err());
    }
}
