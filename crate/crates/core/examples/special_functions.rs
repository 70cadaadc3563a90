//! Jacobi amplitude, elliptic integrals and Bessel functions.

use std::f64::consts::FRAC_PI_2;

use standing_wave::specfun::{bessel_j, bessel_j_triplet, elliptic_e, elliptic_e_complete, elliptic_f, jacobi_am};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for m in [-4.0, 0.0, 0.5, 0.9, 0.999] {
        let phi = 1.1;
        let u = elliptic_f(phi, m)?;
        let back = jacobi_am(u, m)?;
        println!(
            "m = {m:6}: F(1.1|m) = {u:.12}, am(F) = {back:.12}, E(1.1|m) = {:.12}, E(m) = {:.12}",
            elliptic_e(phi, m)?,
            elliptic_e_complete(m)?
        );
        assert!((back - phi).abs() < 1e-12);
    }
    assert!((elliptic_e(FRAC_PI_2, 0.3)? - elliptic_e_complete(0.3)?).abs() < 1e-14);

    for n in [0, 1, 5, 20] {
        println!("J_{n}(10) = {:.15e}", bessel_j(n, 10.0));
    }
    let (jm, j, jp) = bessel_j_triplet(3, 4.0);
    // Recurrence J_{s-1} + J_{s+1} = (2s/z) J_s.
    assert!((jm + jp - 1.5 * j).abs() < 1e-14);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
