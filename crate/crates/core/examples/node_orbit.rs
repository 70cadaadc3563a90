//! Orbits in the plane of a magnetic node for the three initial conditions
//! of the circular, open and nearly separatrix cases.

use standing_wave::classical::{magnetic_node_orbit, reconstruct_trajectory, OrbitCase};
use standing_wave::relkin::{Background, FourVector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bg = Background::head_on(10.0, 10.0, 0.01, 0.01)?;
    let a_in = bg.eval_potential(&FourVector::ZERO);
    for (label, px) in [("circular", -20.0), ("open", 20.0), ("near separatrix", 0.0)] {
        let p = FourVector::on_shell(px, 0.0, 0.0);
        let orbit = magnetic_node_orbit(&bg, &(p + a_in))?;
        let taus: Vec<f64> = (0..=200).map(|i| i as f64 * 0.5).collect();
        let tr = reconstruct_trajectory(&bg, &p, OrbitCase::MagneticNode, &taus)?;
        let last = tr.states.last().unwrap();
        println!(
            "{label:16} s = {:.6}, phi_bar(100) = {:.6}, x(100) = ({:.4}, {:.4}, {:.4})",
            orbit.s,
            tr.phases.last().unwrap(),
            last.x.x(),
            last.x.y(),
            last.x.z()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
