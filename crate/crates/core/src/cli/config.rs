//! Run configuration: presets, `key = value` files and overrides.

use std::path::PathBuf;

use super::CliError;
use crate::classical::OrbitCase;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Trajectory,
    FloquetMap,
    Quasimomentum,
    Compton,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Trajectory => "trajectory",
            CommandKind::FloquetMap => "floquet-map",
            CommandKind::Quasimomentum => "quasimomentum",
            CommandKind::Compton => "compton",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    CsvSvg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVar {
    PPerp,
    XiSigma,
    Lambda,
}

impl SweepVar {
    pub fn name(self) -> &'static str {
        match self {
            SweepVar::PPerp => "p_perp",
            SweepVar::XiSigma => "xi_sigma",
            SweepVar::Lambda => "lambda",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub variable: SweepVar,
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub log: bool,
}

impl SweepSpec {
    pub fn validate(&self, what: &str) -> Result<(), CliError> {
        if self.points < 2 {
            return Err(CliError::Config(format!("{what}: at least 2 points required")));
        }
        if !(self.min < self.max) || !self.min.is_finite() || !self.max.is_finite() {
            return Err(CliError::Config(format!("{what}: need min < max, got {} and {}", self.min, self.max)));
        }
        if self.log && !(self.min > 0.0) {
            return Err(CliError::Config(format!("{what}: log scale needs a positive minimum")));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                if i == n - 1 {
                    self.max
                } else if self.log {
                    (self.min.ln() + t * (self.max.ln() - self.min.ln())).exp()
                } else {
                    self.min + t * (self.max - self.min)
                }
            })
            .collect()
    }
}

/// Everything a command needs. Unused fields are ignored by each command.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    /// Output file stem.
    pub name: String,
    pub xi1: f64,
    pub xi2: f64,
    pub omega1: f64,
    pub omega2: f64,
    /// Spatial part of the initial momentum; the energy is put on shell.
    pub momentum: [f64; 3],
    pub case: OrbitCase,
    pub tau_end: f64,
    pub points: usize,
    pub sweep: SweepSpec,
    /// Second axis of the Floquet map.
    pub q_axis: SweepSpec,
    pub xi: f64,
    pub kp: f64,
    pub s_max: usize,
    pub alpha: f64,
    pub l_parallel: Option<f64>,
    pub tol: Option<f64>,
    pub out: PathBuf,
    pub format: OutputFormat,
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn defaults(command: CommandKind) -> Self {
        RunConfig {
            command,
            name: command.name().to_string(),
            xi1: 1.0,
            xi2: 1.0,
            omega1: 0.01,
            omega2: 0.01,
            momentum: [0.0, 0.0, 0.0],
            case: OrbitCase::MagneticNode,
            tau_end: 50.0,
            points: 501,
            sweep: SweepSpec { variable: SweepVar::PPerp, min: 0.01, max: 100.0, points: 41, log: true },
            q_axis: SweepSpec { variable: SweepVar::Lambda, min: 0.0, max: 10.0, points: 41, log: false },
            xi: 1.0,
            kp: 0.01,
            s_max: 50,
            alpha: crate::emission::ALPHA,
            l_parallel: None,
            tol: None,
            out: PathBuf::from("."),
            format: OutputFormat::Csv,
            threads: None,
        }
    }

    pub fn tolerance(&self) -> f64 {
        self.tol.unwrap_or(match self.command {
            CommandKind::Compton => 1e-10,
            _ => 1e-12,
        })
    }

    /// Applies one `key = value` assignment.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let num = || -> Result<f64, CliError> {
            value.parse::<f64>().map_err(|_| CliError::Config(format!("{key}: '{value}' is not a number")))
        };
        let count = || -> Result<usize, CliError> {
            value.parse::<usize>().map_err(|_| CliError::Config(format!("{key}: '{value}' is not a count")))
        };
        match key {
            "name" => self.name = value.to_string(),
            "xi1" => self.xi1 = num()?,
            "xi2" => self.xi2 = num()?,
            "xi_sigma" => {
                let v = num()?;
                self.xi1 = 0.5 * v;
                self.xi2 = 0.5 * v;
            }
            "omega1" => self.omega1 = num()?,
            "omega2" => self.omega2 = num()?,
            "omega" => {
                self.omega1 = num()?;
                self.omega2 = self.omega1;
            }
            "px" => self.momentum[0] = num()?,
            "py" => self.momentum[1] = num()?,
            "pz" => self.momentum[2] = num()?,
            "case" => {
                self.case = match value {
                    "node" => OrbitCase::MagneticNode,
                    "zero-transverse" => OrbitCase::ZeroTransverse,
                    _ => return Err(CliError::Config(format!("case: expected node or zero-transverse, got '{value}'"))),
                }
            }
            "tau_end" => self.tau_end = num()?,
            "points" => self.points = count()?,
            "sweep_var" => {
                self.sweep.variable = match value {
                    "p_perp" => SweepVar::PPerp,
                    "xi_sigma" => SweepVar::XiSigma,
                    "lambda" => SweepVar::Lambda,
                    _ => return Err(CliError::Config(format!("sweep_var: unknown variable '{value}'"))),
                }
            }
            "sweep_min" => self.sweep.min = num()?,
            "sweep_max" => self.sweep.max = num()?,
            "sweep_points" => self.sweep.points = count()?,
            "sweep_scale" => self.sweep.log = parse_scale(value)?,
            "q_min" => self.q_axis.min = num()?,
            "q_max" => self.q_axis.max = num()?,
            "q_points" => self.q_axis.points = count()?,
            "xi" => self.xi = num()?,
            "kp" => self.kp = num()?,
            "s_max" => self.s_max = count()?,
            "alpha" => self.alpha = num()?,
            "l_parallel" => self.l_parallel = Some(num()?),
            "tol" => self.tol = Some(num()?),
            "out" => self.out = PathBuf::from(value),
            "format" => self.format = parse_format(value)?,
            "threads" => self.threads = Some(count()?),
            _ => return Err(CliError::Config(format!("unknown key '{key}'"))),
        }
        Ok(())
    }

    /// Applies a `key = value` document; blank lines and `#` comments are skipped.
    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", n + 1)))?;
            self.set(k.trim(), v.trim())?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if let Some(t) = self.tol {
            if !(t > 0.0) {
                return Err(CliError::Config(format!("tol must be positive, got {t}")));
            }
        }
        if self.threads == Some(0) {
            return Err(CliError::Config("threads must be at least 1".into()));
        }
        match self.command {
            CommandKind::Trajectory => {
                if !(self.tau_end > 0.0) || self.points < 2 {
                    return Err(CliError::Config("trajectory needs tau_end > 0 and at least 2 points".into()));
                }
            }
            CommandKind::FloquetMap => {
                if self.sweep.variable != SweepVar::Lambda {
                    return Err(CliError::Config("floquet-map sweeps lambda".into()));
                }
                self.sweep.validate("lambda axis")?;
                self.q_axis.validate("Q axis")?;
            }
            CommandKind::Quasimomentum => {
                if self.sweep.variable == SweepVar::Lambda {
                    return Err(CliError::Config("quasimomentum sweeps p_perp or xi_sigma".into()));
                }
                self.sweep.validate("sweep")?;
            }
            CommandKind::Compton => {
                if !(self.xi >= 0.0) || !(self.kp > 0.0) || self.s_max < 1 {
                    return Err(CliError::Config("compton needs xi ≥ 0, kp > 0 and s_max ≥ 1".into()));
                }
            }
        }
        Ok(())
    }
}

fn parse_scale(v: &str) -> Result<bool, CliError> {
    match v {
        "log" => Ok(true),
        "linear" => Ok(false),
        _ => Err(CliError::Config(format!("sweep_scale: expected log or linear, got '{v}'"))),
    }
}

pub fn parse_format(v: &str) -> Result<OutputFormat, CliError> {
    match v {
        "csv" => Ok(OutputFormat::Csv),
        "csv+svg" => Ok(OutputFormat::CsvSvg),
        _ => Err(CliError::Config(format!("format: expected csv or csv+svg, got '{v}'"))),
    }
}

/// A named parameter set for one subcommand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub command: CommandKind,
    pub description: &'static str,
    pub assignments: &'static str,
}

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "fig1-thin",
        command: CommandKind::Trajectory,
        description: "magnetic node, ξ₁=ξ₂=10, ω=0.01m, p_in = −a_in (Π_in = 0), circular orbit",
        assignments: "xi1 = 10\nxi2 = 10\nomega = 0.01\npx = -20\npy = 0\npz = 0\ncase = node\ntau_end = 100\npoints = 1001",
    },
    Preset {
        name: "fig1-dashed",
        command: CommandKind::Trajectory,
        description: "magnetic node, ξ₁=ξ₂=10, ω=0.01m, p_in·ε₁ = a_in·ε₁, p_in·ε₂ = 0.2 a_in·ε₂",
        assignments: "xi1 = 10\nxi2 = 10\nomega = 0.01\npx = 20\npy = 0\npz = 0\ncase = node\ntau_end = 100\npoints = 1001",
    },
    Preset {
        name: "fig1-thick",
        command: CommandKind::Trajectory,
        description: "magnetic node, ξ₁=ξ₂=10, ω=0.01m, p_in·ε₁,₂ → 0",
        assignments: "xi1 = 10\nxi2 = 10\nomega = 0.01\npx = 0\npy = 0\npz = 0\ncase = node\ntau_end = 100\npoints = 1001",
    },
    Preset {
        name: "fig2-left",
        command: CommandKind::Trajectory,
        description: "zero transverse canonical momentum, p_in ≈ m(20.0255,0,0,20.0005), ω=0.01m, ξ₁=ξ₂=10",
        assignments: "xi1 = 10\nxi2 = 10\nomega = 0.01\npx = 0\npy = 0\npz = 20.0005\ncase = zero-transverse\ntau_end = 400\npoints = 1001",
    },
    Preset {
        name: "fig2-right",
        command: CommandKind::Trajectory,
        description: "zero transverse canonical momentum, p_in ≈ m(20.0255,0,0,20.0005), ω=0.01m, ξ₁=0.01, ξ₂=10",
        assignments: "xi1 = 0.01\nxi2 = 10\nomega = 0.01\npx = 0\npy = 0\npz = 20.0005\ncase = zero-transverse\ntau_end = 400\npoints = 1001",
    },
    Preset {
        name: "rest",
        command: CommandKind::Trajectory,
        description: "particle at rest outside equal counter-propagating waves; it never enters the field",
        assignments: "xi1 = 10\nxi2 = 10\nomega = 0.01\npx = 0\npy = 0\npz = 0\ncase = zero-transverse",
    },
    Preset {
        name: "floquet",
        command: CommandKind::FloquetMap,
        description: "Floquet exponent of the Mathieu equation over λ ∈ [−5, 25], Q ∈ [0, 10]",
        assignments: "sweep_var = lambda\nsweep_min = -5\nsweep_max = 25\nsweep_points = 121\nsweep_scale = linear\nq_min = 0\nq_max = 10\nq_points = 41",
    },
    Preset {
        name: "fig3",
        command: CommandKind::Quasimomentum,
        description: "node effective mass against p⊥ for ξ_Σ=1, k̄²=(0.01m)²",
        assignments: "xi_sigma = 1\nomega = 0.01\npx = 0\nsweep_var = p_perp\nsweep_min = 0.01\nsweep_max = 100\nsweep_points = 81\nsweep_scale = log",
    },
    Preset {
        name: "fig4",
        command: CommandKind::Quasimomentum,
        description: "node effective mass against ξ_Σ for k̄²=(5m)², p⊥=2m",
        assignments: "omega = 5\npx = 2\nsweep_var = xi_sigma\nsweep_min = 0.1\nsweep_max = 100\nsweep_points = 301\nsweep_scale = log",
    },
    Preset {
        name: "compton",
        command: CommandKind::Compton,
        description: "harmonic spectrum for ξ=1, k·p=0.01m², 50 harmonics, recoil check for l′∥=0.3m",
        assignments: "xi = 1\nkp = 0.01\ns_max = 50\nl_parallel = 0.3",
    },
    Preset {
        name: "compton-weak",
        command: CommandKind::Compton,
        description: "harmonic spectrum for ξ=0.1, k·p=0.01m², 10 harmonics",
        assignments: "xi = 0.1\nkp = 0.01\ns_max = 10",
    },
];

pub fn find_preset(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_parse() {
        for p in PRESETS {
            let mut c = RunConfig::defaults(p.command);
            c.apply_text(p.assignments).unwrap();
            c.validate().unwrap();
        }
    }

    #[test]
    fn comments_and_errors() {
        let mut c = RunConfig::defaults(CommandKind::Compton);
        c.apply_text("# header\nxi = 0.5  # trailing\n\n kp=0.02 \n").unwrap();
        assert_eq!((c.xi, c.kp), (0.5, 0.02));
        assert!(c.apply_text("bogus = 1").is_err());
        assert!(c.apply_text("xi 1").is_err());
        assert!(c.apply_text("xi = one").is_err());
    }

    #[test]
    fn sweep_values() {
        let s = SweepSpec { variable: SweepVar::PPerp, min: 0.01, max: 100.0, points: 5, log: true };
        let v = s.values();
        assert_eq!(v[4], 100.0);
        assert!((v[2] - 1.0).abs() < 1e-14);
        let bad = SweepSpec { points: 1, ..s };
        assert!(bad.validate("x").is_err());
        let bad = SweepSpec { min: 0.0, ..s };
        assert!(bad.validate("x").is_err());
    }
}
