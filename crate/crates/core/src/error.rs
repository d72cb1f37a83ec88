use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("wavelength {wavelength_um} um outside transparency window [{min_um}, {max_um}] um")]
    OutOfWindow {
        wavelength_um: f64,
        min_um: f64,
        max_um: f64,
    },
    #[error("evanescent wave: transverse wavenumber {q} >= k = {k}")]
    Evanescent { q: f64, k: f64 },
    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("integration step too large: doubling steps changed the result by {change:e}")]
    StepTooLarge { change: f64 },
    #[error("pixel '{0}' captures no modes")]
    EmptyPixel(String),
    #[error("root finding failed: {0}")]
    RootFind(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("validation failure: {0}")]
    Validation(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
