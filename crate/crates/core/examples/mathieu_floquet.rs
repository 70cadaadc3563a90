//! Mathieu characteristic exponents: bands, gaps and the growth of an
//! unstable solution.

use standing_wave::specfun::{mathieu_nu, solve_mathieu, MathieuSpec, SolveOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (lambda, q) in [(4.0, 0.0), (2.5, 0.5), (1.0, 0.5), (-1.0, 0.0), (10.0, 4.0)] {
        let f = mathieu_nu(&MathieuSpec::new(lambda, q))?;
        let kind = if f.is_band { "band" } else { "gap" };
        println!("lambda = {lambda:5}, Q = {q:4}: nu = {:.10} + {:.10}i ({kind})", f.nu_re, f.nu_im);
    }

    // Inside the first tongue, |F| grows like exp(pi Im(nu)) per period once
    // the decaying component has died out.
    let spec = MathieuSpec::new(1.0, 0.5);
    let f = mathieu_nu(&spec)?;
    let pi = std::f64::consts::PI;
    let sol = solve_mathieu(&spec, 0.0, 30.0 * pi, (1.0, 0.0), &SolveOptions::default())?;
    let amp = |y: f64| sol.eval(y).map(|(v, d)| v.hypot(d)).unwrap_or(f64::NAN);
    let slope = (amp(30.0 * pi) / amp(10.0 * pi)).ln() / (20.0 * pi);
    println!("gap growth rate: Im(nu) = {:.6}, measured = {slope:.6}", f.nu_im);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
