//! Build the two-wave background and inspect its geometry and local field
//! invariants at a magnetic node and away from it.

use standing_wave::relkin::{Background, FourVector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bg = Background::head_on(10.0, 10.0, 0.01, 0.01)?;
    println!("k1 = {:?}, k2 = {:?}", bg.k1().0, bg.k2().0);
    println!("k_bar = {:?}, k_delta = {:?}", bg.k_bar().0, bg.k_delta().0);
    println!("k_bar^2 = {:.3e}, k_delta^2 = {:.3e}", bg.k_bar().square(), bg.k_delta().square());

    let p = FourVector::on_shell(1.0, 0.0, 50.0);
    for z in [0.0, 40.0, 78.5] {
        let x = FourVector([0.0, 0.0, 0.0, z]);
        let inv = bg.relativistic_invariants(&p, &x)?;
        println!(
            "z = {z:5.1}: xi_local = {:.4}, eta = {:.4}, F = {:.3e}, G = {:.3e}, F/eta^2 = {:.3e}",
            inv.xi, inv.eta, inv.cal_f, inv.cal_g, inv.ratio
        );
    }
    // A single plane wave has null invariants everywhere.
    let pw = Background::single(1.0, 0.01)?;
    let inv = pw.relativistic_invariants(&p, &FourVector([3.0, 0.0, 0.0, 1.0]))?;
    assert!(inv.cal_f.abs() < 1e-12 && inv.cal_g.abs() < 1e-12);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
