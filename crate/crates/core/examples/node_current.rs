//! Longitudinal current of a node state with vanishing longitudinal momentum.

use standing_wave::quantum::{kg_reduce, longitudinal_current, node_wave_samples, KGCase};
use standing_wave::relkin::{Background, FourVector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bg = Background::head_on(1.0, 1.0, 0.05, 0.05)?;
    let p = FourVector::on_shell(0.7, -0.3, 0.0);
    let red = kg_reduce(&bg, &p, KGCase::MagneticNode)?;
    let phases: Vec<f64> = (0..=400).map(|i| i as f64 * 0.05).collect();
    let samples = node_wave_samples(&red, &phases)?;
    let j = longitudinal_current(&bg, &p, &samples);
    let worst = j.iter().map(|c| c.norm()).fold(0.0, f64::max);
    println!("max |j^3| over {} phases: {worst:.3e}", phases.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
