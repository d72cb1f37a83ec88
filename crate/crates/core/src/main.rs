use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use twinbeam::app::{self, Command};
use twinbeam::io::{GridPreset, Preset, RunConfig};

#[derive(Parser)]
#[command(name = "twinbeam", version, about = "Pulsed multimode twin-beam correlations")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// TOML run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Built-in configuration, used when no --config is given.
    #[arg(long, global = true, value_enum)]
    preset: Option<Preset>,
    /// Output directory (overrides output.dir).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Monte-Carlo shots (speckle only).
    #[arg(long, global = true)]
    shots: Option<usize>,
    #[arg(long, global = true, value_enum)]
    grid: Option<GridPreset>,
    /// Re-run and compare against the manifest already in the output directory.
    #[arg(long, global = true)]
    check: bool,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Cut angle, Omega_GVD, q_diff, GVM and walk-off.
    Scales,
    /// Photon-number and pair-amplitude spectra along Omega and q.
    Spectrum,
    /// Correlation and coherence peaks with their rms widths.
    Peaks,
    /// Numeric widths against the analytic laws over a gain sweep.
    WidthsVsGain,
    /// Space-time X-shaped correlation and coherence.
    Spacetime,
    /// Runs every validation oracle. Exit 2 if any threshold is missed.
    Validate,
    /// Stochastic speckle ensemble, spectrum and noise reduction factor.
    Speckle,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Scales => Command::Scales,
            Cmd::Spectrum => Command::Spectrum,
            Cmd::Peaks => Command::Peaks,
            Cmd::WidthsVsGain => Command::WidthsVsGain,
            Cmd::Spacetime => Command::Spacetime,
            Cmd::Validate => Command::Validate,
            Cmd::Speckle => Command::Speckle,
        }
    }
}

fn config(cli: &Cli) -> twinbeam::Result<RunConfig> {
    let mut cfg = match (&cli.config, cli.preset) {
        (Some(p), _) => RunConfig::load(p)?,
        (None, Some(p)) => p.config(),
        (None, None) => Preset::Bbo1030Collinear.config(),
    };
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(n) = cli.shots {
        cfg.speckle.shots = n;
    }
    if let Some(g) = cli.grid {
        cfg.grid.preset = g;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let out = cli.out.clone().unwrap_or_else(|| PathBuf::from(&cfg.output.dir));
    let cmd = Command::from(cli.command);
    let result = if cli.check {
        app::check(cmd, &cfg, &out)
    } else {
        app::run(cmd, &cfg, &out)
    };
    match &result {
        Ok(o) => {
            for line in &o.report {
                println!("{line}");
            }
            if !cli.check {
                println!("wrote {} files to {}", o.manifest.files.len(), out.display());
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(app::exit_code(&result) as u8)
}
