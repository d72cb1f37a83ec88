use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};

use super::modes::{FourierMode, SpaceTimePoint};
use crate::error::{Error, Result};

/// Transform-limited Gaussian pump `α_p(r, t) = exp(−r²/w_p² − t²/τ_p²)`,
/// normalised to one at the origin, with parametric gain `g`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PumpSpec {
    pub wavelength_um: f64,
    pub tau_fs: f64,
    pub waist_um: f64,
    pub gain: f64,
}

impl PumpSpec {
    pub fn new(wavelength_um: f64, tau_fs: f64, waist_um: f64, gain: f64) -> Result<Self> {
        let p = PumpSpec {
            wavelength_um,
            tau_fs,
            waist_um,
            gain,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("wavelength", self.wavelength_um),
            ("tau", self.tau_fs),
            ("waist", self.waist_um),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain(format!("pump {name} must be positive, got {v}")));
            }
        }
        if !(self.gain >= 0.0 && self.gain.is_finite()) {
            return Err(Error::Domain(format!("pump gain must be >= 0, got {}", self.gain)));
        }
        Ok(())
    }

    pub fn with_gain(mut self, gain: f64) -> Self {
        self.gain = gain;
        self
    }

    pub fn amplitude(&self, xi: &SpaceTimePoint) -> f64 {
        let r2 = xi.x * xi.x + xi.y * xi.y;
        (-r2 / (self.waist_um * self.waist_um) - (xi.t * xi.t) / (self.tau_fs * self.tau_fs)).exp()
    }

    /// Amplitude restricted to the time axis.
    pub fn temporal_amplitude(&self, t: f64) -> f64 {
        (-(t * t) / (self.tau_fs * self.tau_fs)).exp()
    }

    /// Amplitude restricted to one transverse axis.
    pub fn transverse_amplitude(&self, x: f64) -> f64 {
        (-(x * x) / (self.waist_um * self.waist_um)).exp()
    }

    /// `∫ dt/(2π)^{1/2} e^{iΩt} α_p(t) = (τ/√2) e^{−Ω²τ²/4}`.
    pub fn temporal_spectrum(&self, omega: f64) -> f64 {
        self.tau_fs / SQRT_2 * (-(omega * omega) * self.tau_fs * self.tau_fs / 4.0).exp()
    }

    /// `∫ dx/(2π)^{1/2} e^{−iqx} α_p(x) = (w/√2) e^{−q²w²/4}`.
    pub fn transverse_spectrum(&self, q: f64) -> f64 {
        self.waist_um / SQRT_2 * (-(q * q) * self.waist_um * self.waist_um / 4.0).exp()
    }

    /// Full 3-D Fourier amplitude with the `(2π)^{-3/2}` convention.
    pub fn spectrum(&self, w: &FourierMode) -> f64 {
        self.transverse_spectrum(w.qx) * self.transverse_spectrum(w.qy) * self.temporal_spectrum(w.omega)
    }

    /// rms width of the pump Fourier amplitude along Ω: √2/τ_p.
    pub fn sigma_omega(&self) -> f64 {
        SQRT_2 / self.tau_fs
    }

    /// rms width of the pump Fourier amplitude along q: √2/w_p.
    pub fn sigma_q(&self) -> f64 {
        SQRT_2 / self.waist_um
    }
}
