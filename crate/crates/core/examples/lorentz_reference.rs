//! Compare an analytic trajectory with direct integration of the Lorentz
//! equation and monitor the conserved quantities.

use standing_wave::classical::{
    conserved_longitudinal, conserved_transverse, integrate_lorentz_on, reconstruct_trajectory, LorentzOptions,
    OrbitCase,
};
use standing_wave::relkin::{Background, FourVector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bg = Background::head_on(10.0, 10.0, 0.01, 0.01)?;
    let p = FourVector::on_shell(20.0, 0.0, 0.0);
    let taus: Vec<f64> = (0..=500).map(|i| i as f64 * 0.1).collect();
    let tr = reconstruct_trajectory(&bg, &p, OrbitCase::MagneticNode, &taus)?;
    let oracle = integrate_lorentz_on(&bg, &tr.initial_state(), &taus, &LorentzOptions::default())?;

    let mut worst = 0.0f64;
    for (a, o) in tr.states.iter().zip(&oracle) {
        worst = worst.max((a.x - o.x).0.iter().fold(0.0f64, |m, v| m.max(v.abs())));
    }
    let c0 = conserved_longitudinal(&bg, &oracle[0])?;
    let c1 = conserved_longitudinal(&bg, oracle.last().unwrap())?;
    let t0 = conserved_transverse(&bg, &oracle[0], 1, 1)?;
    let t1 = conserved_transverse(&bg, oracle.last().unwrap(), 1, 1)?;
    println!("max |x_analytic - x_oracle| over tau in [0, 50]: {worst:.3e}");
    println!("longitudinal invariant drift: {:.3e}", (c1 - c0).abs() / c0.abs().max(1.0));
    println!("e_11 . Pi drift: {:.3e}", (t1 - t0).abs());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
