//! Longitudinal wavenumbers and the phase mismatch of the elementary
//! down-conversion process `pump(w0) → signal(w) + signal(w0 − w)`.

use serde::{Deserialize, Serialize};

use super::crystal::{omega_to_wavelength, wavelength_to_omega, CrystalSpec, Polarization};
use super::modes::FourierMode;
use super::scales::PhaseMatchSummary;
use crate::error::{Error, Result};
use crate::SPEED_OF_LIGHT_UM_PER_FS;

/// How the extraordinary longitudinal wavenumber is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KzModel {
    /// `k(Ω) + (∂k/∂q_x) q_x − q²/(2k)`.
    #[default]
    Paraxial,
    /// Exact root of the uniaxial dispersion relation.
    Exact,
}

/// Longitudinal wavenumber `k_z(w)` of a wave with carrier `carrier_um`.
///
/// Transverse offsets along +x tilt the wavevector away from the optic axis
/// (`θ = θ_c − q_x/k`), so BBO has `∂k_p/∂q_x > 0` in this frame.
pub fn kz(crystal: &CrystalSpec, pol: Polarization, w: &FourierMode, carrier_um: f64, model: KzModel) -> Result<f64> {
    let omega = wavelength_to_omega(carrier_um) + w.omega;
    let lambda = omega_to_wavelength(omega);
    let q2 = w.q_squared();
    let theta = crystal.cut_angle_rad;
    match (pol, model) {
        (Polarization::Ordinary, _) => {
            let k = crystal.k_jet(pol, omega, 0.0)?.k;
            if q2 >= k * k {
                return Err(Error::Evanescent { q: q2.sqrt(), k });
            }
            Ok((k * k - q2).sqrt())
        }
        (Polarization::Extraordinary, KzModel::Paraxial) => {
            let k = crystal.k_jet(pol, omega, theta)?.k;
            if q2 >= k * k {
                return Err(Error::Evanescent { q: q2.sqrt(), k });
            }
            let slope = -crystal.log_index_slope(lambda, theta)?;
            Ok(k + slope * w.qx - q2 / (2.0 * k))
        }
        (Polarization::Extraordinary, KzModel::Exact) => {
            crystal.check_window(lambda)?;
            let k0 = omega / SPEED_OF_LIGHT_UM_PER_FS;
            let inv_o = 1.0 / crystal.sellmeier_o.eps(lambda);
            let inv_e = 1.0 / crystal.sellmeier_e.eps(lambda);
            let (s, c) = theta.sin_cos();
            let a = c * c * inv_o + s * s * inv_e;
            let b = 2.0 * w.qx * s * c * (inv_o - inv_e);
            let cc = w.qx * w.qx * s * s * (inv_o - inv_e) + q2 * inv_e - k0 * k0;
            let disc = b * b - 4.0 * a * cc;
            let kz = if disc >= 0.0 {
                (-b + disc.sqrt()) / (2.0 * a)
            } else {
                f64::NAN
            };
            if !(kz > 0.0) {
                return Err(Error::Evanescent {
                    q: q2.sqrt(),
                    k: k0 / a.sqrt(),
                });
            }
            Ok(kz)
        }
    }
}

/// Type-I (e → o + o) quasi-degenerate phase matching in a given crystal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseMatching {
    pub crystal: CrystalSpec,
    pub pump_wavelength_um: f64,
    pub kz_model: KzModel,
}

impl PhaseMatching {
    pub fn new(crystal: CrystalSpec, pump_wavelength_um: f64) -> Self {
        PhaseMatching {
            crystal,
            pump_wavelength_um,
            kz_model: KzModel::Paraxial,
        }
    }

    pub fn with_kz_model(mut self, model: KzModel) -> Self {
        self.kz_model = model;
        self
    }

    pub fn signal_wavelength_um(&self) -> f64 {
        2.0 * self.pump_wavelength_um
    }

    pub fn signal_kz(&self, w: &FourierMode) -> Result<f64> {
        kz(
            &self.crystal,
            Polarization::Ordinary,
            w,
            self.signal_wavelength_um(),
            self.kz_model,
        )
    }

    pub fn pump_kz(&self, w0: &FourierMode) -> Result<f64> {
        kz(
            &self.crystal,
            Polarization::Extraordinary,
            w0,
            self.pump_wavelength_um,
            self.kz_model,
        )
    }

    /// `l_c [k_sz(w) + k_sz(w0 − w) − k_pz(w0)]`.
    pub fn mismatch_full(&self, w: &FourierMode, w0: &FourierMode) -> Result<f64> {
        let ks1 = self.signal_kz(w)?;
        let ks2 = self.signal_kz(&(*w0 - *w))?;
        let kp = self.pump_kz(w0)?;
        Ok(self.crystal.length_um * (ks1 + ks2 - kp))
    }

    /// Conjugate-mode mismatch `D̄(w) = l_c D(w; −w)`.
    pub fn mismatch(&self, w: &FourierMode) -> Result<f64> {
        self.mismatch_full(w, &FourierMode::ZERO)
    }

    /// `φ(w) = (l_c/2) [k_p + k_sz(w) − k_sz(−w)]`.
    pub fn phase(&self, w: &FourierMode) -> Result<f64> {
        let kp = self.pump_kz(&FourierMode::ZERO)?;
        let a = self.signal_kz(w)?;
        let b = self.signal_kz(&-*w)?;
        Ok(0.5 * self.crystal.length_um * (kp + a - b))
    }
}

/// Anything that yields the scaled mismatch `D̄(w; w0 − w)`.
pub trait Mismatch: Sync {
    fn full(&self, w: &FourierMode, w0: &FourierMode) -> Result<f64>;

    fn conjugate(&self, w: &FourierMode) -> Result<f64> {
        self.full(w, &FourierMode::ZERO)
    }
}

impl Mismatch for PhaseMatching {
    fn full(&self, w: &FourierMode, w0: &FourierMode) -> Result<f64> {
        self.mismatch_full(w, w0)
    }
}

/// Wavenumbers truncated at second order in every variable, built from a
/// [`PhaseMatchSummary`]. Useful as a dispersion with exactly known parity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticDispersion {
    pub summary: PhaseMatchSummary,
}

impl QuadraticDispersion {
    fn ks(&self, w: &FourierMode) -> f64 {
        let s = &self.summary;
        s.k_s + s.k1_s * w.omega + 0.5 * s.k2_s * w.omega * w.omega - w.q_squared() / (2.0 * s.k_s)
    }

    fn kp(&self, w: &FourierMode) -> f64 {
        let s = &self.summary;
        s.k_p + s.k1_p * w.omega + 0.5 * s.k2_p * w.omega * w.omega + s.dkp_dqx * w.qx - w.q_squared() / (2.0 * s.k_p)
    }
}

impl Mismatch for QuadraticDispersion {
    fn full(&self, w: &FourierMode, w0: &FourierMode) -> Result<f64> {
        Ok(self.summary.length_um * (self.ks(w) + self.ks(&(*w0 - *w)) - self.kp(w0)))
    }
}

/// Second-order expansion `Δ̄0 + η Ω̄² − q̄²` of the conjugate-mode mismatch.
pub fn mismatch_taylor(w: &FourierMode, summary: &PhaseMatchSummary) -> f64 {
    let om = w.omega / summary.omega_gvd;
    let q2 = w.q_squared() / (summary.q_diff * summary.q_diff);
    summary.delta0_bar + summary.eta * om * om - q2
}
