// Config-driven run: load a preset, override it from TOML, run a subcommand
// and verify the checksummed manifest.

use twinbeam::app::{self, Command};
use twinbeam::io::{Preset, RunConfig, RunManifest};

pub fn run_example() -> twinbeam::Result<usize> {
    let mut cfg = Preset::Bbo1030Collinear.config();
    cfg.pump.gain = 2.0;
    let text = cfg.to_toml();
    let cfg = RunConfig::from_toml_str(&text)?;
    let dir = std::env::temp_dir().join(format!("twinbeam-config-run-{}", std::process::id()));
    let outcome = app::run(Command::Scales, &cfg, &dir)?;
    for line in &outcome.report {
        println!("{line}");
    }
    let stored = RunManifest::load(&dir)?;
    let bad = stored.verify(&dir);
    println!(
        "{} files, {} failing checksum, config sha256 {}",
        stored.files.len(),
        bad.len(),
        &stored.config_sha256[..12]
    );
    let _ = std::fs::remove_dir_all(&dir);
    Ok(stored.files.len() - bad.len())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
