//! Run configuration, artifact writers and the run manifest.

mod binary;
mod config;
mod csv;
mod manifest;
mod svg;

pub use binary::{read_grid, write_grid, GRID_MAGIC};
pub use config::{
    CrystalConfig, GridConfig, GridPreset, OutputConfig, Preset, PumpConfig, RunConfig, SpeckleSection, SweepConfig,
};
pub use csv::{fmt_f64, grid_to_csv, CsvTable};
pub use manifest::{sha256_hex, FileEntry, RunManifest, MANIFEST_NAME};
pub use svg::{heatmap, line_plot, Series};

use std::path::Path;

use crate::error::{Error, Result};

/// Writes `contents` to `path`, creating parent directories.
pub fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
    }
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}
