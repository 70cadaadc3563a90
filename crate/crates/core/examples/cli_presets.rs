//! Run every built-in preset through the command layer into a scratch
//! directory.

use standing_wave::cli::{run_config, RunConfig, PRESETS};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("standing-wave-presets-{}", std::process::id()));
    for preset in PRESETS {
        if preset.name == "fig3" {
            // The exact Floquet sweep takes a few seconds; skipped here.
            continue;
        }
        let mut cfg = RunConfig::defaults(preset.command);
        cfg.apply_text(preset.assignments)?;
        cfg.name = preset.name.to_string();
        cfg.out = dir.clone();
        cfg.validate()?;
        let report = run_config(&cfg)?;
        println!("{} ({}): {}", preset.name, preset.command.name(), report.lines.first().map_or("", |s| s));
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
