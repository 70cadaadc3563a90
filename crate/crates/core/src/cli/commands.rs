//! Command drivers. Each returns the written files and a short report.

use std::path::PathBuf;

use rayon::prelude::*;

use super::config::{OutputFormat, RunConfig, SweepVar};
use super::output::{num, svg, write_file, Csv, Panel, Series};
use super::CliError;
use crate::classical::{
    conserved_longitudinal, conserved_transverse, delta_orbit, integrate_lorentz_on, magnetic_node_orbit,
    reconstruct_trajectory, LorentzOptions, OrbitCase,
};
use crate::emission::{node_emission_stability, spectrum, EmissionConfig};
use crate::quantum::{quasimomentum, KGCase, QuasiModel};
use crate::relkin::{Background, FourVector};
use crate::specfun::{mathieu_nu_with, MathieuOptions, MathieuSpec};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub files: Vec<PathBuf>,
    pub lines: Vec<String>,
    /// Set when output was written but the result did not meet its
    /// convergence criterion.
    pub failure: Option<CliError>,
}

fn background(cfg: &RunConfig) -> Result<Background, CliError> {
    Background::head_on(cfg.xi1, cfg.xi2, cfg.omega1, cfg.omega2).map_err(|e| CliError::Config(e.to_string()))
}

fn momentum(cfg: &RunConfig) -> FourVector {
    let [x, y, z] = cfg.momentum;
    FourVector::on_shell(x, y, z)
}

fn wants_svg(cfg: &RunConfig) -> bool {
    cfg.format == OutputFormat::CsvSvg
}

pub fn cmd_trajectory(cfg: &RunConfig) -> Result<Report, CliError> {
    let bg = background(cfg)?;
    let p = momentum(cfg);
    let n = cfg.points;
    let taus: Vec<f64> = (0..n).map(|i| cfg.tau_end * i as f64 / (n - 1) as f64).collect();
    let mut report = Report::default();

    match cfg.case {
        OrbitCase::MagneticNode => {
            let pi = p + bg.eval_potential(&FourVector::ZERO);
            let orbit = magnetic_node_orbit(&bg, &pi)?;
            report.lines.push(format!("s = {}", num(orbit.s)));
            report.lines.push(format!("varpi_perp^2 = {}, mu_perp^2 = {}", num(orbit.varpi_perp2), num(orbit.mu_perp2)));
        }
        OrbitCase::ZeroTransverse => {
            let o = delta_orbit(&bg, &p)?;
            report.lines.push(format!("varpi_delta^2 = {}, mu_delta^2 = {}", num(o.varpi_delta2), num(o.mu_delta2)));
        }
    }

    let tr = reconstruct_trajectory(&bg, &p, cfg.case, &taus)?;
    if tr.at_rest {
        let mut csv = Csv::new(&["tau", "t", "x", "y", "z", "p0", "p1", "p2", "p3", "status"]);
        let s = tr.states[0];
        let mut cells: Vec<String> = vec![num(s.tau)];
        cells.extend((0..4).map(|i| num(s.x[i])));
        cells.extend((0..4).map(|i| num(s.p[i])));
        cells.push("at_rest".into());
        csv.row(&cells);
        report.files.push(csv.write(&cfg.out, &cfg.name)?);
        report.lines.push("at rest: the particle never enters the field".into());
        return Ok(report);
    }

    let opts = LorentzOptions::with_tol(cfg.tolerance());
    let oracle = integrate_lorentz_on(&bg, &tr.states[0], &taus, &opts)?;
    let oracle_phase = |x: &FourVector| {
        let v = bg.phase_variables(x);
        match cfg.case {
            OrbitCase::MagneticNode => v.bar,
            OrbitCase::ZeroTransverse => v.delta,
        }
    };
    let mut csv = Csv::new(&[
        "tau", "t", "x", "y", "z", "p0", "p1", "p2", "p3", "phase", "oracle_t", "oracle_x", "oracle_y", "oracle_z",
        "oracle_p0", "oracle_p1", "oracle_p2", "oracle_p3", "oracle_phase", "conserved1", "conserved2", "conserved3",
    ]);
    let mut max_dev: f64 = 0.0;
    for ((a, o), phase) in tr.states.iter().zip(&oracle).zip(&tr.phases) {
        let op = oracle_phase(&o.x);
        max_dev = max_dev.max((op - phase).abs());
        let mut cells = vec![num(a.tau)];
        cells.extend((0..4).map(|i| num(a.x[i])));
        cells.extend((0..4).map(|i| num(a.p[i])));
        cells.push(num(*phase));
        cells.extend((0..4).map(|i| num(o.x[i])));
        cells.extend((0..4).map(|i| num(o.p[i])));
        cells.push(num(op));
        cells.push(num(conserved_transverse(&bg, o, 1, 1)?));
        cells.push(num(conserved_transverse(&bg, o, 1, 2)?));
        cells.push(num(conserved_longitudinal(&bg, o)?));
        csv.row(&cells);
    }
    report.files.push(csv.write(&cfg.out, &cfg.name)?);
    report.lines.push(format!("max |phase - oracle phase| = {}", num(max_dev)));

    if wants_svg(cfg) {
        let orbit: Vec<(f64, f64)> = tr.states.iter().map(|s| (s.x.x(), s.x.y())).collect();
        let phase: Vec<(f64, f64)> = taus.iter().copied().zip(tr.phases.iter().copied()).collect();
        let doc = svg(&[
            Panel {
                title: "transverse orbit",
                x_label: "x",
                y_label: "y",
                log_x: false,
                log_y: false,
                scatter: false,
                series: vec![Series { label: "analytic", points: orbit }],
            },
            Panel {
                title: "phase",
                x_label: "tau",
                y_label: "phase",
                log_x: false,
                log_y: false,
                scatter: false,
                series: vec![Series { label: "analytic", points: phase }],
            },
        ]);
        report.files.push(write_file(&cfg.out, &format!("{}.svg", cfg.name), &doc)?);
    }
    Ok(report)
}

pub fn cmd_floquet_map(cfg: &RunConfig) -> Result<Report, CliError> {
    let lambdas = cfg.sweep.values();
    let qs = cfg.q_axis.values();
    let opts = MathieuOptions { rtol: cfg.tolerance(), ..MathieuOptions::default() };
    let cells: Vec<(f64, f64)> = lambdas.iter().flat_map(|&l| qs.iter().map(move |&q| (l, q))).collect();
    let results = cells
        .par_iter()
        .map(|&(l, q)| mathieu_nu_with(&MathieuSpec::new(l, q), &opts))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::NonConvergence(e.to_string()))?;
    let mut csv = Csv::new(&["lambda", "q", "nu_re", "nu_im", "band", "q_over_lambda", "wedge"]);
    let mut gaps = 0usize;
    for (&(l, q), f) in cells.iter().zip(&results) {
        gaps += usize::from(!f.is_band);
        let wedge = l > 0.0 && q >= 0.0 && q < 0.5 * l;
        csv.row(&[
            num(l),
            num(q),
            num(f.nu_re),
            num(f.nu_im),
            u8::from(f.is_band).to_string(),
            num(q / l),
            u8::from(wedge).to_string(),
        ]);
    }
    let mut report = Report::default();
    report.files.push(csv.write(&cfg.out, &cfg.name)?);
    report.lines.push(format!("{} cells, {} in gaps", cells.len(), gaps));
    if wants_svg(cfg) {
        let gap_pts: Vec<(f64, f64)> =
            cells.iter().zip(&results).filter(|(_, f)| !f.is_band).map(|(&c, _)| c).collect();
        let lmax = cfg.sweep.max;
        let wedge = vec![(0.0, 0.0), (lmax.max(0.0), 0.5 * lmax.max(0.0))];
        let doc = svg(&[Panel {
            title: "gaps (Im nu != 0)",
            x_label: "lambda",
            y_label: "Q",
            log_x: false,
            log_y: false,
            scatter: true,
            series: vec![
                Series { label: "gap", points: gap_pts },
                Series { label: "Q = lambda/2", points: wedge },
            ],
        }]);
        report.files.push(write_file(&cfg.out, &format!("{}.svg", cfg.name), &doc)?);
    }
    Ok(report)
}

struct QuasiRow {
    x: f64,
    pw: f64,
    he: f64,
    ms: f64,
    exact: crate::quantum::QuasiMomentum,
}

pub fn cmd_quasimomentum(cfg: &RunConfig) -> Result<Report, CliError> {
    let xs = cfg.sweep.values();
    let rows = xs
        .par_iter()
        .map(|&x| -> Result<QuasiRow, CliError> {
            let (bg, p) = match cfg.sweep.variable {
                SweepVar::PPerp => (background(cfg)?, FourVector::on_shell(x, 0.0, 0.0)),
                _ => (
                    Background::head_on(0.5 * x, 0.5 * x, cfg.omega1, cfg.omega2)
                        .map_err(|e| CliError::Config(e.to_string()))?,
                    FourVector::on_shell(cfg.momentum[0], cfg.momentum[1], 0.0),
                ),
            };
            let m2 = |model| {
                quasimomentum(&bg, &p, KGCase::MagneticNode, model).map(|q| q.m_star2.re).unwrap_or(f64::NAN)
            };
            let exact = quasimomentum(&bg, &p, KGCase::MagneticNode, QuasiModel::Exact)?;
            Ok(QuasiRow {
                x,
                pw: m2(QuasiModel::PlaneWave),
                he: m2(QuasiModel::HighEnergy),
                ms: m2(QuasiModel::MultiScale),
                exact,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let var = cfg.sweep.variable.name();
    let mut csv = Csv::new(&[var, "m2_pw", "m2_he", "m2_ms", "m2_exact_re", "m2_exact_im", "nu_re", "nu_im", "band"]);
    let mut gaps = 0usize;
    for r in &rows {
        let nu = r.exact.nu.unwrap_or_default();
        gaps += usize::from(!r.exact.is_band);
        csv.row(&[
            num(r.x),
            num(r.pw),
            num(r.he),
            num(r.ms),
            num(r.exact.m_star2.re),
            num(r.exact.m_star2.im),
            num(nu.re),
            num(nu.im),
            u8::from(r.exact.is_band).to_string(),
        ]);
    }
    let mut report = Report::default();
    report.files.push(csv.write(&cfg.out, &cfg.name)?);
    report.lines.push(format!("{} points, {} in gaps", rows.len(), gaps));
    if wants_svg(cfg) {
        let series = |label, f: fn(&QuasiRow) -> f64| Series {
            label,
            points: rows.iter().map(|r| (r.x, f(r))).collect(),
        };
        let doc = svg(&[Panel {
            title: "effective mass squared",
            x_label: var,
            y_label: "m*^2",
            log_x: cfg.sweep.log,
            log_y: true,
            scatter: false,
            series: vec![
                series("plane wave", |r| r.pw),
                series("high energy", |r| r.he),
                series("multiple scale", |r| r.ms),
                series("exact (Re)", |r| r.exact.m_star2.re),
                series("exact (Im)", |r| r.exact.m_star2.im.abs()),
            ],
        }]);
        report.files.push(write_file(&cfg.out, &format!("{}.svg", cfg.name), &doc)?);
    }
    Ok(report)
}

pub fn cmd_compton(cfg: &RunConfig) -> Result<Report, CliError> {
    let ecfg = EmissionConfig { alpha: cfg.alpha, quad_tol: cfg.tolerance(), ..EmissionConfig::new(cfg.xi, cfg.kp, cfg.s_max) };
    let sp = spectrum(&ecfg)?;
    let mut csv = Csv::new(&["s", "w_s", "cumulative"]);
    for (s, w, c) in sp.cumulative() {
        csv.row(&[s.to_string(), num(w), num(c)]);
    }
    let mut report = Report::default();
    report.files.push(csv.write(&cfg.out, &cfg.name)?);
    report.lines.push(format!(
        "total = {}, tail estimate = {}, harmonics = {}, converged = {}",
        num(sp.total),
        num(sp.tail_estimate),
        sp.entries.len(),
        sp.converged
    ));
    if let Some(l) = cfg.l_parallel {
        let d = node_emission_stability(l);
        report.lines.push(format!(
            "node recoil q'_par = {}: {}",
            num(d.recoil),
            if d.unstable { "unstable, the outgoing state leaves the node" } else { "stable" }
        ));
    }
    if wants_svg(cfg) {
        let pts: Vec<(f64, f64)> = sp.entries.iter().map(|&(s, w)| (s as f64, w)).collect();
        let doc = svg(&[Panel {
            title: "harmonic spectrum",
            x_label: "s",
            y_label: "W_s",
            log_x: false,
            log_y: true,
            scatter: false,
            series: vec![Series { label: "W_s", points: pts }],
        }]);
        report.files.push(write_file(&cfg.out, &format!("{}.svg", cfg.name), &doc)?);
    }
    if !sp.converged {
        report.failure = Some(CliError::NonConvergence(format!(
            "spectrum tail {} exceeds {:e} of the total",
            num(sp.tail_estimate),
            ecfg.tail_tol
        )));
    }
    Ok(report)
}
