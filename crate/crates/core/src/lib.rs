//! Quasi-stationary model of pulsed multimode parametric down-conversion.

// `!(x > 0.0)` guards are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytics;
pub mod app;
pub mod dispersion;
pub mod error;
pub mod fourier;
pub mod io;
pub mod qs;
pub mod special;
pub mod speckle;
pub mod validation;

pub use error::{Error, Result};

/// Speed of light in vacuum, µm/fs.
pub const SPEED_OF_LIGHT_UM_PER_FS: f64 = 0.299_792_458;
