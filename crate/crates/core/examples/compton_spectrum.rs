//! Harmonic spectrum of nonlinear Compton emission and the node recoil check.

use standing_wave::emission::{node_emission_stability, spectrum, EmissionConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for xi in [0.1, 1.0] {
        let sp = spectrum(&EmissionConfig::new(xi, 0.01, 50))?;
        println!(
            "xi = {xi}: {} harmonics, total = {:.6e}, tail = {:.2e}, converged = {}",
            sp.entries.len(),
            sp.total,
            sp.tail_estimate,
            sp.converged
        );
        for (s, w, cum) in sp.cumulative().into_iter().take(4) {
            println!("    s = {s}: W_s = {w:.6e}, cumulative = {cum:.6e}");
        }
    }
    let d = node_emission_stability(0.3);
    println!("emitting l_par = 0.3 gives recoil {} (unstable: {})", d.recoil, d.unstable);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
