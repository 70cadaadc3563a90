//! Effective mass at the magnetic node in the four models, across a
//! transverse-momentum sweep.

use standing_wave::quantum::{quasimomentum, KGCase, QuasiModel};
use standing_wave::relkin::{Background, FourVector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bg = Background::head_on(0.5, 0.5, 0.01, 0.01)?;
    println!("{:>10} {:>12} {:>12} {:>12} {:>12}", "p_perp", "PW", "HE", "MS", "exact");
    for p_perp in [0.01, 0.1, 1.0, 10.0, 100.0] {
        let p = FourVector::on_shell(p_perp, 0.0, 0.0);
        let m2 = |model| quasimomentum(&bg, &p, KGCase::MagneticNode, model).map(|q| q.m_star2.re);
        println!(
            "{p_perp:>10} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
            m2(QuasiModel::PlaneWave)?,
            m2(QuasiModel::HighEnergy)?,
            m2(QuasiModel::MultiScale)?,
            m2(QuasiModel::Exact)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
