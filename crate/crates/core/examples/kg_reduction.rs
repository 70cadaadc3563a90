//! Reduce the Klein–Gordon equation to Mathieu form and classify the state.

use standing_wave::quantum::{kg_reduce, KGCase};
use standing_wave::relkin::{Background, FourVector};
use standing_wave::specfun::mathieu_nu;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let node = Background::head_on(0.5, 0.5, 0.01, 0.01)?;
    let p = FourVector::on_shell(1.0, 0.0, 0.0);
    let red = kg_reduce(&node, &p, KGCase::MagneticNode)?;
    let f = mathieu_nu(&red.spec)?;
    println!(
        "node: lambda = {:.4}, Q = {:.4}, Q/lambda = {:.4}, nu = {:.8} (band: {})",
        red.spec.lambda,
        red.spec.q,
        red.ratio(),
        f.nu_re,
        f.is_band
    );

    let bg = Background::head_on(10.0, 10.0, 0.01, 0.01)?;
    for pz in [12.0, 17.0, 25.0] {
        let red = kg_reduce(&bg, &FourVector::on_shell(0.0, 0.0, pz), KGCase::ZeroTransverse)?;
        println!(
            "delta pz = {pz}: lambda = {:+.4e}, Q = {:.4e}, quantum forbidden = {}, classically forbidden = {}",
            red.spec.lambda, red.spec.q, red.quantum_forbidden, red.classical_forbidden
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
