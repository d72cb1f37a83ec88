use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::sellmeier::SellmeierSet;
use crate::error::{Error, Result};
use crate::SPEED_OF_LIGHT_UM_PER_FS;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarization {
    Ordinary,
    Extraordinary,
}

/// A uniaxial crystal slab. Lengths in µm, angles in rad.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrystalSpec {
    pub name: String,
    pub sellmeier_o: SellmeierSet,
    pub sellmeier_e: SellmeierSet,
    /// Angle between the optic axis and the slab normal.
    pub cut_angle_rad: f64,
    pub length_um: f64,
    /// Validity range of the Sellmeier sets, µm.
    pub window_um: (f64, f64),
}

/// Wavenumber and its first two derivatives with respect to angular
/// frequency: `k` [rad/µm], `k1` [fs/µm], `k2` [fs²/µm].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KJet {
    pub k: f64,
    pub k1: f64,
    pub k2: f64,
}

pub fn wavelength_to_omega(lambda_um: f64) -> f64 {
    2.0 * PI * SPEED_OF_LIGHT_UM_PER_FS / lambda_um
}

pub fn omega_to_wavelength(omega: f64) -> f64 {
    2.0 * PI * SPEED_OF_LIGHT_UM_PER_FS / omega
}

impl CrystalSpec {
    /// β-barium borate with the handbook Sellmeier set. The cut angle is
    /// left at zero; use [`CrystalSpec::with_collinear_cut`] to set it.
    pub fn bbo(length_um: f64) -> Self {
        CrystalSpec {
            name: "BBO".to_string(),
            sellmeier_o: SellmeierSet::bbo_ordinary(),
            sellmeier_e: SellmeierSet::bbo_extraordinary(),
            cut_angle_rad: 0.0,
            length_um,
            window_um: (0.189, 3.5),
        }
    }

    pub fn with_cut_angle(mut self, theta: f64) -> Self {
        self.cut_angle_rad = theta;
        self
    }

    /// Sets the cut for collinear degenerate type-I (e → o + o) matching of
    /// a pump at `pump_wavelength_um`.
    pub fn with_collinear_cut(self, pump_wavelength_um: f64) -> Result<Self> {
        let theta = self.collinear_cut_angle(pump_wavelength_um)?;
        Ok(self.with_cut_angle(theta))
    }

    pub fn check_window(&self, lambda_um: f64) -> Result<()> {
        let (lo, hi) = self.window_um;
        if !(lambda_um >= lo && lambda_um <= hi) {
            return Err(Error::OutOfWindow {
                wavelength_um: lambda_um,
                min_um: lo,
                max_um: hi,
            });
        }
        Ok(())
    }

    /// Refractive index. `theta` is the angle between the wavevector and the
    /// optic axis and is ignored for the ordinary wave.
    pub fn index(&self, pol: Polarization, lambda_um: f64, theta: f64) -> Result<f64> {
        self.check_window(lambda_um)?;
        Ok(self.inverse_eps(pol, lambda_um, theta).0.powf(-0.5))
    }

    /// `u = 1/n²` and its λ-derivatives.
    fn inverse_eps(&self, pol: Polarization, l: f64, theta: f64) -> (f64, f64, f64) {
        let inv = |set: &SellmeierSet| {
            let e = set.eps_jet(l);
            let u = 1.0 / e.value;
            let u1 = -e.d1 / (e.value * e.value);
            let u2 = 2.0 * e.d1 * e.d1 / e.value.powi(3) - e.d2 / (e.value * e.value);
            (u, u1, u2)
        };
        match pol {
            Polarization::Ordinary => inv(&self.sellmeier_o),
            Polarization::Extraordinary => {
                let (c2, s2) = (theta.cos().powi(2), theta.sin().powi(2));
                let o = inv(&self.sellmeier_o);
                let e = inv(&self.sellmeier_e);
                (c2 * o.0 + s2 * e.0, c2 * o.1 + s2 * e.1, c2 * o.2 + s2 * e.2)
            }
        }
    }

    /// `k(ω) = n ω / c` and its ω-derivatives, by analytic differentiation of
    /// the Sellmeier forms.
    pub fn k_jet(&self, pol: Polarization, omega: f64, theta: f64) -> Result<KJet> {
        let l = omega_to_wavelength(omega);
        self.check_window(l)?;
        let (u, u1, u2) = self.inverse_eps(pol, l, theta);
        let n = u.powf(-0.5);
        let n_l = -0.5 * u.powf(-1.5) * u1;
        let n_ll = 0.75 * u.powf(-2.5) * u1 * u1 - 0.5 * u.powf(-1.5) * u2;
        // λ = 2πc/ω
        let l_w = -l / omega;
        let l_ww = 2.0 * l / (omega * omega);
        let n_w = n_l * l_w;
        let n_ww = n_ll * l_w * l_w + n_l * l_ww;
        let c = SPEED_OF_LIGHT_UM_PER_FS;
        Ok(KJet {
            k: n * omega / c,
            k1: (n + omega * n_w) / c,
            k2: (2.0 * n_w + omega * n_ww) / c,
        })
    }

    /// `(1/n) dn/dθ` of the extraordinary wave.
    pub fn log_index_slope(&self, lambda_um: f64, theta: f64) -> Result<f64> {
        self.check_window(lambda_um)?;
        let eo = self.sellmeier_o.eps(lambda_um);
        let ee = self.sellmeier_e.eps(lambda_um);
        let (u, _, _) = self.inverse_eps(Polarization::Extraordinary, lambda_um, theta);
        let du = (2.0 * theta).sin() * (1.0 / ee - 1.0 / eo);
        // n = u^{-1/2}  =>  (1/n) dn/dθ = -du / (2u)
        Ok(-0.5 * du / u)
    }

    /// Root-finds θ with `n_e(θ, λ_p) = n_o(2 λ_p)` by bisection to 1e-12 rad.
    pub fn collinear_cut_angle(&self, pump_wavelength_um: f64) -> Result<f64> {
        let target = self.index(Polarization::Ordinary, 2.0 * pump_wavelength_um, 0.0)?;
        let f = |theta: f64| -> Result<f64> {
            Ok(self.index(Polarization::Extraordinary, pump_wavelength_um, theta)? - target)
        };
        let (mut lo, mut hi) = (0.0, 0.5 * PI);
        let (mut flo, fhi) = (f(lo)?, f(hi)?);
        if flo.signum() == fhi.signum() {
            return Err(Error::RootFind(format!(
                "no collinear degenerate match for pump {pump_wavelength_um} um in {}",
                self.name
            )));
        }
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            let fm = f(mid)?;
            if fm == 0.0 {
                return Ok(mid);
            }
            if fm.signum() == flo.signum() {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}
