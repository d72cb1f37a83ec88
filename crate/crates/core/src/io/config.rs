use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::dispersion::{CrystalSpec, PumpSpec, SellmeierSet};
use crate::error::{Error, Result};
use crate::fourier::{Dimensionality, GridSpec};

/// Top-level run configuration. Every physical key carries its unit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_seed")]
    pub seed: u64,
    pub crystal: CrystalConfig,
    pub pump: PumpConfig,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default)]
    pub output: OutputConfig,
    #[serde(default)]
    pub sweep: SweepConfig,
    #[serde(default)]
    pub speckle: SpeckleSection,
}

fn default_seed() -> u64 {
    1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrystalConfig {
    /// `"bbo"` or `"custom"`; custom crystals need both Sellmeier sets.
    pub name: String,
    pub length_mm: f64,
    /// Cut angle; omitted means collinear degenerate matching.
    #[serde(default)]
    pub cut_angle_deg: Option<f64>,
    #[serde(default)]
    pub sellmeier_o: Option<SellmeierSet>,
    #[serde(default)]
    pub sellmeier_e: Option<SellmeierSet>,
    #[serde(default)]
    pub window_um: Option<[f64; 2]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PumpConfig {
    pub wavelength_um: f64,
    pub tau_p_fs: f64,
    pub w_p_um: f64,
    pub gain: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum GridPreset {
    Coarse,
    Standard,
    Fine,
}

impl GridPreset {
    /// `(samples per pump 1/e width, widths spanned)`.
    pub fn sampling(self) -> (f64, f64) {
        match self {
            GridPreset::Coarse => (8.0, 4.0),
            GridPreset::Standard => (16.0, 6.0),
            GridPreset::Fine => (32.0, 8.0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub preset: GridPreset,
    /// `"temporal"`, `"spatio_temporal"` or `"full"`.
    pub dims: Dimensionality,
    /// Samples across the central band for 1D spectra and sweeps.
    pub spectrum_samples: usize,
    /// Half-span of 1D spectra in units of `Ω_GVD` or `q_diff`.
    pub spectrum_span: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            preset: GridPreset::Standard,
            dims: Dimensionality::Temporal,
            spectrum_samples: 401,
            spectrum_span: 3.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    pub dir: PathBuf,
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig {
            dir: PathBuf::from("out"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub gains: Vec<f64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            gains: vec![0.5, 1.0, 2.0, 3.0, 4.0, 6.0],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpeckleSection {
    pub shots: usize,
    /// Temporal modes of the sampled grid.
    pub modes: usize,
    /// Time window in pump durations.
    pub window_tau: f64,
    /// Pixels span `2·pixel_half_width + 1` modes per axis.
    pub pixel_half_width: usize,
    /// Signal pixel centre, in modes from `Ω = 0`.
    pub pixel_offset_modes: usize,
    /// Gains of the NRF table.
    pub nrf_gains: [f64; 4],
    /// Shots written as CSV field dumps under `shots/`.
    #[serde(default)]
    pub dump_shots: usize,
}

impl Default for SpeckleSection {
    fn default() -> Self {
        SpeckleSection {
            shots: 10_000,
            modes: 128,
            window_tau: 8.0,
            pixel_half_width: 8,
            pixel_offset_modes: 12,
            nrf_gains: [0.5, 1.0, 2.0, 4.0],
            dump_shots: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Preset {
    /// 2 mm BBO, 515 nm pump, collinear degenerate at 1030 nm.
    #[value(name = "bbo_1030_collinear")]
    Bbo1030Collinear,
    /// 2 mm BBO, 352 nm pump, 1 ps / 200 µm FWHM pulse.
    #[value(name = "bbo_704_352")]
    Bbo704From352,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Bbo1030Collinear => "bbo_1030_collinear",
            Preset::Bbo704From352 => "bbo_704_352",
        }
    }

    pub fn config(self) -> RunConfig {
        let crystal = CrystalConfig {
            name: "bbo".into(),
            length_mm: 2.0,
            cut_angle_deg: None,
            sellmeier_o: None,
            sellmeier_e: None,
            window_um: None,
        };
        let pump = match self {
            Preset::Bbo1030Collinear => PumpConfig {
                wavelength_um: 0.515,
                tau_p_fs: 150.0,
                w_p_um: 150.0,
                gain: 1.0,
            },
            // 1/e half-widths from FWHM: x / sqrt(2 ln 2) for |α|².
            Preset::Bbo704From352 => PumpConfig {
                wavelength_um: 0.352,
                tau_p_fs: 1000.0 / (2.0 * std::f64::consts::LN_2).sqrt(),
                w_p_um: 200.0 / (2.0 * std::f64::consts::LN_2).sqrt(),
                gain: 1.0,
            },
        };
        RunConfig {
            seed: default_seed(),
            crystal,
            pump,
            grid: GridConfig::default(),
            output: OutputConfig::default(),
            sweep: SweepConfig::default(),
            speckle: SpeckleSection::default(),
        }
    }
}

impl RunConfig {
    pub fn from_toml_str(s: &str) -> Result<RunConfig> {
        let cfg: RunConfig = toml::from_str(s).map_err(|e| Error::Config(e.message().to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<RunConfig> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        RunConfig::from_toml_str(&s).map_err(|e| match e {
            Error::Config(m) => Error::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serialises")
    }

    /// SHA-256 of the canonical TOML serialisation.
    pub fn hash(&self) -> String {
        super::sha256_hex(self.to_toml().as_bytes())
    }

    pub fn validate(&self) -> Result<()> {
        let c = &self.crystal;
        if !(c.length_mm > 0.0) {
            return Err(Error::Config("crystal.length_mm must be positive".into()));
        }
        match c.name.as_str() {
            "bbo" => {}
            "custom" => {
                if c.sellmeier_o.is_none() || c.sellmeier_e.is_none() || c.window_um.is_none() {
                    return Err(Error::Config(
                        "custom crystal needs crystal.sellmeier_o, crystal.sellmeier_e and crystal.window_um".into(),
                    ));
                }
            }
            other => {
                return Err(Error::Config(format!(
                    "unknown crystal.name `{other}` (expected bbo or custom)"
                )))
            }
        }
        let p = &self.pump;
        for (key, v) in [
            ("pump.wavelength_um", p.wavelength_um),
            ("pump.tau_p_fs", p.tau_p_fs),
            ("pump.w_p_um", p.w_p_um),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("{key} must be positive")));
            }
        }
        if !(p.gain >= 0.0 && p.gain.is_finite()) {
            return Err(Error::Config("pump.gain must be non-negative".into()));
        }
        if self.grid.spectrum_samples < 8 || !(self.grid.spectrum_span > 0.0) {
            return Err(Error::Config(
                "grid.spectrum_samples must be >= 8 and grid.spectrum_span positive".into(),
            ));
        }
        if self.sweep.gains.iter().any(|g| !(*g > 0.0)) {
            return Err(Error::Config("sweep.gains must be positive".into()));
        }
        let s = &self.speckle;
        if s.shots == 0 || s.modes < 8 || !s.modes.is_multiple_of(2) || !(s.window_tau > 0.0) {
            return Err(Error::Config(
                "speckle needs shots > 0, an even mode count >= 8 and window_tau > 0".into(),
            ));
        }
        Ok(())
    }

    pub fn crystal_spec(&self) -> Result<CrystalSpec> {
        let c = &self.crystal;
        let mut spec = CrystalSpec::bbo(c.length_mm * 1000.0);
        if c.name == "custom" {
            spec.name = "custom".into();
            spec.sellmeier_o = c.sellmeier_o.clone().expect("validated");
            spec.sellmeier_e = c.sellmeier_e.clone().expect("validated");
            let w = c.window_um.expect("validated");
            spec.window_um = (w[0], w[1]);
        }
        match c.cut_angle_deg {
            Some(deg) => Ok(spec.with_cut_angle(deg.to_radians())),
            None => spec.with_collinear_cut(self.pump.wavelength_um),
        }
    }

    pub fn pump_spec(&self) -> Result<PumpSpec> {
        let p = &self.pump;
        PumpSpec::new(p.wavelength_um, p.tau_p_fs, p.w_p_um, p.gain)
    }

    /// ξ grid for the configured preset and dimensionality.
    pub fn grid_spec(&self) -> Result<GridSpec> {
        let (spw, widths) = self.grid.preset.sampling();
        GridSpec::for_pump(&self.pump_spec()?, self.grid.dims, spw, widths)
    }
}
