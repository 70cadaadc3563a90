//! Volkov, high-energy and multiple-scale phases for the same state.

use standing_wave::quantum::{
    high_energy_validity_ratio, high_energy_wavefunction, kg_reduce, multiscale_amplitude, multiscale_phase,
    volkov_exponent, KGCase,
};
use standing_wave::relkin::{Background, FourVector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bg = Background::head_on(1.0, 1.0, 0.01, 0.01)?;
    let p = FourVector::on_shell(0.0, 0.0, 50.0);
    // Small values mean the high-energy form is trustworthy.
    let node_p = FourVector::on_shell(2.0, 0.0, 50.0);
    println!("node validity ratio k^2(a^2 + 2a.p)/(k.p)^2 = {:.3e}", high_energy_validity_ratio(&bg, &node_p)?);

    let red = kg_reduce(&bg, &p, KGCase::ZeroTransverse)?;
    for phi in [0.5, 2.0, 6.0] {
        let x = FourVector([0.0, 0.0, 0.0, phi / 0.02]);
        let he = high_energy_wavefunction(&bg, &p, &x)?;
        let pd = bg.phase_variables(&x).delta;
        println!(
            "phi_delta = {pd:.3}: HE h = {:.8}, MS u = {:.8}, MS amplitude = {:.8}",
            he.h,
            multiscale_phase(&red, pd)?,
            multiscale_amplitude(&red, &bg, pd)?
        );
    }
    println!("Volkov exponent of wave 1 at phi = 1: {:.8}", volkov_exponent(&bg.wave1, &p, 1.0)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
