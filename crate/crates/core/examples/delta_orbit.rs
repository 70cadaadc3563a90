//! Motion with vanishing transverse canonical momentum: allowed, forbidden
//! and at-rest configurations.

use standing_wave::classical::{delta_orbit, forbidden_by_peak_potential, reconstruct_trajectory, OrbitCase, Regime};
use standing_wave::relkin::{Background, FourVector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bg = Background::head_on(10.0, 10.0, 0.01, 0.01)?;
    for pz in [1.0, 19.0, 20.0005, 40.0] {
        let p = FourVector::on_shell(0.0, 0.0, pz);
        let o = delta_orbit(&bg, &p)?;
        println!(
            "pz = {pz:8}: varpi^2 = {:+.4e}, mu^2 = {:.4e}, {:?} (peak test says forbidden: {})",
            o.varpi_delta2,
            o.mu_delta2,
            o.regime,
            forbidden_by_peak_potential(&bg, &p)
        );
        if o.regime == Regime::Allowed {
            let taus: Vec<f64> = (0..=100).map(|i| i as f64).collect();
            let tr = reconstruct_trajectory(&bg, &p, OrbitCase::ZeroTransverse, &taus)?;
            let s = tr.states.last().unwrap();
            println!("    tau = 100: phi_delta = {:.6}, z = {:.4}", tr.phases.last().unwrap(), s.x.z());
        }
    }
    let rest = reconstruct_trajectory(&bg, &FourVector::on_shell(0.0, 0.0, 0.0), OrbitCase::ZeroTransverse, &[0.0, 1.0])?;
    println!("particle at rest stays at rest: {}", rest.at_rest);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
