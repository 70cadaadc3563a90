//! Runs every example's `run_example` entry point.

#[path = "../examples/approximations.rs"]
mod approximations;

#[test]
fn approximations_runs() {
    approximations::run_example().expect("approximations example");
}

#[path = "../examples/cli_presets.rs"]
mod cli_presets;

#[test]
fn cli_presets_runs() {
    cli_presets::run_example().expect("cli_presets example");
}

#[path = "../examples/compton_spectrum.rs"]
mod compton_spectrum;

#[test]
fn compton_spectrum_runs() {
    compton_spectrum::run_example().expect("compton_spectrum example");
}

#[path = "../examples/delta_orbit.rs"]
mod delta_orbit;

#[test]
fn delta_orbit_runs() {
    delta_orbit::run_example().expect("delta_orbit example");
}

#[path = "../examples/kg_reduction.rs"]
mod kg_reduction;

#[test]
fn kg_reduction_runs() {
    kg_reduction::run_example().expect("kg_reduction example");
}

#[path = "../examples/lorentz_reference.rs"]
mod lorentz_reference;

#[test]
fn lorentz_reference_runs() {
    lorentz_reference::run_example().expect("lorentz_reference example");
}

#[path = "../examples/mathieu_floquet.rs"]
mod mathieu_floquet;

#[test]
fn mathieu_floquet_runs() {
    mathieu_floquet::run_example().expect("mathieu_floquet example");
}

#[path = "../examples/node_current.rs"]
mod node_current;

#[test]
fn node_current_runs() {
    node_current::run_example().expect("node_current example");
}

#[path = "../examples/node_orbit.rs"]
mod node_orbit;

#[test]
fn node_orbit_runs() {
    node_orbit::run_example().expect("node_orbit example");
}

#[path = "../examples/quasimomentum_models.rs"]
mod quasimomentum_models;

#[test]
fn quasimomentum_models_runs() {
    quasimomentum_models::run_example().expect("quasimomentum_models example");
}

#[path = "../examples/relkin_invariants.rs"]
mod relkin_invariants;

#[test]
fn relkin_invariants_runs() {
    relkin_invariants::run_example().expect("relkin_invariants example");
}

#[path = "../examples/special_functions.rs"]
mod special_functions;

#[test]
fn special_functions_runs() {
    special_functions::run_example().expect("special_functions example");
}
