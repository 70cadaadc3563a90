//! Randomised invariants across the library.

use proptest::prelude::*;

use standing_wave::classical::{reconstruct_trajectory, OrbitCase};
use standing_wave::emission::{harmonic_probability, spectrum, EmissionConfig};
use standing_wave::quantum::{kg_reduce, quasimomentum, KGCase, QuasiModel};
use standing_wave::relkin::{Background, FourVector};
use standing_wave::specfun::{elliptic_f, jacobi_am, mathieu_nu, MathieuSpec};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boosts_preserve_products(
        a in prop::array::uniform3(-10.0..10.0f64),
        b in prop::array::uniform3(-10.0..10.0f64),
        theta in 0.0..std::f64::consts::PI,
        beta in -0.95..0.95f64,
    ) {
        let p = FourVector::on_shell(a[0], a[1], a[2]);
        let q = FourVector::on_shell(b[0], b[1], b[2]);
        let n = [theta.sin(), 0.0, theta.cos()];
        let before = p.dot(&q);
        let after = p.boost(n, beta).dot(&q.boost(n, beta));
        prop_assert!((before - after).abs() <= 1e-10 * before.abs().max(1.0));
    }

    #[test]
    fn amplitude_inverts_first_kind(phi in -6.0..6.0f64, m in -5.0..0.99f64) {
        let u = elliptic_f(phi, m).unwrap();
        prop_assert!((jacobi_am(u, m).unwrap() - phi).abs() < 1e-9);
    }

    #[test]
    fn floquet_exponent_even_in_q(lambda in -5.0..30.0f64, q in 0.0..10.0f64) {
        let a = mathieu_nu(&MathieuSpec::new(lambda, q)).unwrap();
        let b = mathieu_nu(&MathieuSpec::new(lambda, -q)).unwrap();
        prop_assert_eq!(a.is_band, b.is_band);
        prop_assert!((a.nu_re - b.nu_re).abs() < 1e-8 && (a.nu_im - b.nu_im).abs() < 1e-8);
    }

    #[test]
    fn node_states_lie_in_the_wedge(
        xi in 0.01..10.0f64,
        omega in 0.005..1.0f64,
        px in -50.0..50.0f64,
        py in -50.0..50.0f64,
    ) {
        let bg = Background::head_on(xi, xi, omega, omega).unwrap();
        let red = kg_reduce(&bg, &FourVector::on_shell(px, py, 0.0), KGCase::MagneticNode).unwrap();
        prop_assert!(red.spec.lambda > 0.0);
        prop_assert!(red.spec.q >= 0.0);
        prop_assert!(red.spec.q / red.spec.lambda <= 0.5 + 1e-12);
    }

    #[test]
    fn harmonic_probabilities_are_non_negative(xi in 0.0..3.0f64, kp in 1e-3..0.1f64, s in 1usize..25) {
        let w = harmonic_probability(&EmissionConfig::new(xi, kp, 30), s).unwrap();
        prop_assert!(w >= 0.0, "W_{} = {}", s, w);
    }

    #[test]
    fn analytic_trajectories_stay_on_shell(
        xi in 0.1..10.0f64,
        omega in 0.005..0.05f64,
        px in -20.0..20.0f64,
        py in -20.0..20.0f64,
    ) {
        let bg = Background::head_on(xi, xi, omega, omega).unwrap();
        let taus: Vec<f64> = (0..=50).map(|i| i as f64).collect();
        let tr = reconstruct_trajectory(&bg, &FourVector::on_shell(px, py, 0.0), OrbitCase::MagneticNode, &taus).unwrap();
        for s in &tr.states {
            prop_assert!((s.p.square() - 1.0).abs() < 1e-9 * s.p.t().powi(2));
            prop_assert!(s.x.z().abs() < 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn effective_mass_is_rotation_invariant(
        xi in 0.1..2.0f64,
        p_perp in 0.05..5.0f64,
        angle in 0.0..std::f64::consts::TAU,
    ) {
        let bg = Background::head_on(xi, xi, 0.05, 0.05).unwrap();
        let p = FourVector::on_shell(p_perp, 0.0, 0.0);
        let a = quasimomentum(&bg, &p, KGCase::MagneticNode, QuasiModel::Exact).unwrap();
        let b = quasimomentum(&bg, &p.rotate_z(angle), KGCase::MagneticNode, QuasiModel::Exact).unwrap();
        prop_assert!((a.m_star2 - b.m_star2).norm() < 1e-8 * a.m_star2.norm());
    }

    #[test]
    fn spectrum_cumulative_is_monotone(xi in 0.05..2.0f64, kp in 1e-3..0.05f64) {
        let sp = spectrum(&EmissionConfig::new(xi, kp, 40)).unwrap();
        let rows = sp.cumulative();
        prop_assert!(rows.windows(2).all(|w| w[1].2 >= w[0].2));
        prop_assert!((rows.last().unwrap().2 - sp.total).abs() <= 1e-12 * sp.total);
    }
}
