//! CSV and SVG writers with fixed, locale-independent formatting.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use super::CliError;

/// 17 significant digits.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, Default)]
pub struct Csv {
    text: String,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut text = header.join(",");
        text.push('\n');
        Csv { text }
    }

    pub fn row(&mut self, cells: &[String]) {
        self.text.push_str(&cells.join(","));
        self.text.push('\n');
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn write(&self, dir: &Path, stem: &str) -> Result<PathBuf, CliError> {
        write_file(dir, &format!("{stem}.csv"), &self.text)
    }
}

pub fn write_file(dir: &Path, file: &str, text: &str) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Config(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(file);
    fs::write(&path, text).map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

pub struct Series<'a> {
    pub label: &'a str,
    pub points: Vec<(f64, f64)>,
}

pub struct Panel<'a> {
    pub title: &'a str,
    pub x_label: &'a str,
    pub y_label: &'a str,
    pub log_x: bool,
    pub log_y: bool,
    pub series: Vec<Series<'a>>,
    /// Draw markers instead of polylines.
    pub scatter: bool,
}

const COLOURS: [&str; 5] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];
const W: f64 = 420.0;
const H: f64 = 320.0;
const M: f64 = 50.0;

fn transform(v: f64, log: bool) -> Option<f64> {
    let t = if log { if v > 0.0 { v.log10() } else { return None } } else { v };
    t.is_finite().then_some(t)
}

/// Side-by-side line plots in a single self-contained SVG document.
pub fn svg(panels: &[Panel]) -> String {
    let mut s = String::new();
    let width = W * panels.len() as f64;
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{H}" font-family="sans-serif" font-size="11">"#
    );
    for (i, p) in panels.iter().enumerate() {
        let ox = W * i as f64;
        let pts: Vec<(f64, f64)> = p
            .series
            .iter()
            .flat_map(|se| se.points.iter())
            .filter_map(|&(x, y)| Some((transform(x, p.log_x)?, transform(y, p.log_y)?)))
            .collect();
        let (mut x0, mut x1, mut y0, mut y1) = pts.iter().fold(
            (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY),
            |(a, b, c, d), &(x, y)| (a.min(x), b.max(x), c.min(y), d.max(y)),
        );
        if !(x1 > x0) {
            x0 -= 1.0;
            x1 += 1.0;
        }
        if !(y1 > y0) {
            y0 -= 1.0;
            y1 += 1.0;
        }
        let sx = |x: f64| ox + M + (x - x0) / (x1 - x0) * (W - 1.5 * M);
        let sy = |y: f64| H - M - (y - y0) / (y1 - y0) * (H - 1.7 * M);
        let _ = writeln!(
            s,
            r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
            ox + M,
            0.7 * M,
            W - 1.5 * M,
            H - 1.7 * M
        );
        let _ = writeln!(s, r#"<text x="{:.2}" y="20">{}</text>"#, ox + M, escape(p.title));
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, ox + W / 2.0, H - 12.0, escape(p.x_label));
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" transform="rotate(-90 {:.2} {:.2})">{}</text>"#,
            ox + 14.0,
            H / 2.0,
            ox + 14.0,
            H / 2.0,
            escape(p.y_label)
        );
        let tick = |v: f64, log: bool| if log { format!("1e{v:.1}") } else { format!("{v:.3e}") };
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, sx(x0), H - M + 14.0, tick(x0, p.log_x));
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#, sx(x1), H - M + 14.0, tick(x1, p.log_x));
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, ox + 2.0, sy(y0), tick(y0, p.log_y));
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, ox + 2.0, sy(y1) + 10.0, tick(y1, p.log_y));
        for (k, se) in p.series.iter().enumerate() {
            let colour = COLOURS[k % COLOURS.len()];
            let mapped: Vec<(f64, f64)> = se
                .points
                .iter()
                .filter_map(|&(x, y)| Some((sx(transform(x, p.log_x)?), sy(transform(y, p.log_y)?))))
                .collect();
            if p.scatter {
                for (x, y) in &mapped {
                    let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="1.5" fill="{colour}"/>"#);
                }
            } else if !mapped.is_empty() {
                let path: Vec<String> = mapped.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
                let _ = writeln!(
                    s,
                    r#"<polyline fill="none" stroke="{colour}" stroke-width="1.2" points="{}"/>"#,
                    path.join(" ")
                );
            }
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" fill="{colour}">{}</text>"#,
                ox + W - 0.8 * M - 60.0,
                0.7 * M + 14.0 * (k as f64 + 1.0),
                escape(se.label)
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(num(1.0), "1.0000000000000000e0");
        assert_eq!(num(-0.1), "-1.0000000000000001e-1");
    }

    #[test]
    fn csv_layout() {
        let mut c = Csv::new(&["a", "b"]);
        c.row(&[num(1.0), "x".into()]);
        assert_eq!(c.as_str(), "a,b\n1.0000000000000000e0,x\n");
    }

    #[test]
    fn svg_is_closed() {
        let s = svg(&[Panel {
            title: "t",
            x_label: "x",
            y_label: "y",
            log_x: false,
            log_y: true,
            scatter: false,
            series: vec![Series { label: "s", points: vec![(0.0, 1.0), (1.0, 10.0), (2.0, -1.0)] }],
        }]);
        assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
        assert!(s.contains("polyline"));
    }
}
