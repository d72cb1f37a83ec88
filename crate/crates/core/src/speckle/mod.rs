//! Monte-Carlo sampling of the output field in the symmetric-ordering
//! (Wigner) representation.
//!
//! Discrete output amplitudes are `b_k = √Δw A_out(w_k)`, so vacuum carries
//! `E|b_k|² = 1/2` and normally ordered photon numbers follow by subtracting
//! the ordering terms at the pixel level.

mod ensemble;
mod pixels;
mod sampler;
mod squeezer;

pub use ensemble::{Estimate, GaussianMoments, NrfEstimate, PhotonMoments, ShotEnsemble};
pub use pixels::{Pixel, PixelPair};
pub use sampler::{SpeckleConfig, SpeckleSampler};
pub use squeezer::{two_mode_squeezer, SqueezerStats};

/// Wigner expectation of `|b|²` for one vacuum mode.
pub const VACUUM_LEVEL: f64 = 0.5;
