//! Characteristic scales of the quasi-stationary model.

use serde::{Deserialize, Serialize};

use super::crystal::{wavelength_to_omega, CrystalSpec, Polarization};
use super::pump::PumpSpec;
use crate::error::Result;

/// Derived phase-matching constants. Units: rad/µm for wavenumbers, fs/µm
/// for `k1_*`, fs²/µm for `k2_*`, fs for `tau_gvm`, µm for `l_woff`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseMatchSummary {
    /// `(2k_s − k_p) l_c`.
    pub delta0_bar: f64,
    /// `|k″_s l_c|^{−1/2}`, rad/fs.
    pub omega_gvd: f64,
    /// `(k_s/l_c)^{1/2}`, rad/µm.
    pub q_diff: f64,
    /// `l_c (k′_p − k′_s)`.
    pub tau_gvm: f64,
    /// `(∂k_p/∂q_x) l_c`.
    pub l_woff: f64,
    /// Sign of `k″_s`.
    pub eta: f64,
    /// Poynting walk-off angle of the pump, rad.
    pub rho_p: f64,
    pub k_s: f64,
    pub k_p: f64,
    pub k1_s: f64,
    pub k1_p: f64,
    pub k2_s: f64,
    pub k2_p: f64,
    pub dkp_dqx: f64,
    pub length_um: f64,
}

impl PhaseMatchSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary is plain data")
    }

    /// GVM per unit length, fs/mm.
    pub fn gvm_fs_per_mm(&self) -> f64 {
        (self.k1_p - self.k1_s) * 1000.0
    }

    /// Walk-off per unit length, µm/mm.
    pub fn walkoff_um_per_mm(&self) -> f64 {
        self.dkp_dqx * 1000.0
    }
}

pub fn characteristic_scales(crystal: &CrystalSpec, pump: &PumpSpec) -> Result<PhaseMatchSummary> {
    let lp = pump.wavelength_um;
    let wp = wavelength_to_omega(lp);
    let theta = crystal.cut_angle_rad;
    let s = crystal.k_jet(Polarization::Ordinary, 0.5 * wp, 0.0)?;
    let p = crystal.k_jet(Polarization::Extraordinary, wp, theta)?;
    let lc = crystal.length_um;
    let dkp_dqx = -crystal.log_index_slope(lp, theta)?;
    Ok(PhaseMatchSummary {
        delta0_bar: (2.0 * s.k - p.k) * lc,
        omega_gvd: (s.k2 * lc).abs().powf(-0.5),
        q_diff: (s.k / lc).sqrt(),
        tau_gvm: lc * (p.k1 - s.k1),
        l_woff: dkp_dqx * lc,
        eta: if s.k2 >= 0.0 { 1.0 } else { -1.0 },
        rho_p: -dkp_dqx.atan(),
        k_s: s.k,
        k_p: p.k,
        k1_s: s.k1,
        k1_p: p.k1,
        k2_s: s.k2,
        k2_p: p.k2,
        dkp_dqx,
        length_um: lc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dispersion::modes::FourierMode;
    use crate::dispersion::phase_matching::{mismatch_taylor, PhaseMatching};

    fn setup() -> (PhaseMatching, PhaseMatchSummary) {
        let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(0.515).unwrap();
        let pump = PumpSpec::new(0.515, 150.0, 150.0, 1.0).unwrap();
        let s = characteristic_scales(&crystal, &pump).unwrap();
        (PhaseMatching::new(crystal, 0.515), s)
    }

    #[test]
    fn quadratic_fit_recovers_gvd_scale() {
        let (pm, s) = setup();
        // least squares of D̄(Ω) = a + b Ω² on |Ω| ≤ 0.2 Ω_GVD
        let n = 41;
        let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
        for i in 0..n {
            let om = 0.2 * s.omega_gvd * (2.0 * i as f64 / (n - 1) as f64 - 1.0);
            let x = om * om;
            let y = pm.mismatch(&FourierMode::temporal(om)).unwrap();
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        let nf = n as f64;
        let b = (nf * sxy - sx * sy) / (nf * sxx - sx * sx);
        let expected = s.eta / (s.omega_gvd * s.omega_gvd);
        assert!((b / expected - 1.0).abs() < 0.01, "{b} vs {expected}");
    }

    #[test]
    fn taylor_form_tracks_full_mismatch() {
        let (pm, s) = setup();
        for i in 1..=10 {
            let f = i as f64 / 10.0;
            for w in [
                FourierMode::temporal(f * s.omega_gvd),
                FourierMode::new(f * s.q_diff, 0.0, 0.0),
                FourierMode::new(0.0, f * s.q_diff, -f * s.omega_gvd * 0.7),
            ] {
                let full = pm.mismatch(&w).unwrap();
                let taylor = mismatch_taylor(&w, &s);
                let scale = taylor.abs().max(0.05);
                assert!((full - taylor).abs() / scale < 0.05, "{w:?}: {full} vs {taylor}");
            }
        }
    }

    #[test]
    fn taylor_unit_scaling() {
        let (_, mut s) = setup();
        s.delta0_bar = 0.0;
        s.eta = 1.0;
        assert_eq!(mismatch_taylor(&FourierMode::ZERO, &s), 0.0);
        let one = mismatch_taylor(&FourierMode::temporal(s.omega_gvd), &s);
        assert!((one - 1.0).abs() < 1e-14);
        let locus = FourierMode::new(0.37 * s.q_diff, 0.0, 0.37 * s.omega_gvd);
        assert!(mismatch_taylor(&locus, &s).abs() < 1e-14);
    }

    fn richardson(f: &dyn Fn(f64) -> f64, x: f64, h: f64, second: bool) -> f64 {
        let d = |h: f64| {
            if second {
                (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
            } else {
                (f(x + h) - f(x - h)) / (2.0 * h)
            }
        };
        (4.0 * d(h / 2.0) - d(h)) / 3.0
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let (pm, s) = setup();
        let c = &pm.crystal;
        let ws = wavelength_to_omega(1.03);
        let ks = |om: f64| c.k_jet(Polarization::Ordinary, om, 0.0).unwrap().k;
        let kp = |om: f64| c.k_jet(Polarization::Extraordinary, om, c.cut_angle_rad).unwrap().k;
        let rel = |a: f64, b: f64| ((a - b) / b).abs();
        assert!(rel(richardson(&ks, ws, 1e-2, false), s.k1_s) < 1e-5);
        assert!(rel(richardson(&kp, 2.0 * ws, 1e-2, false), s.k1_p) < 1e-5);
        assert!(rel(richardson(&ks, ws, 2e-2, true), s.k2_s) < 1e-5);
        assert!(rel(richardson(&kp, 2.0 * ws, 2e-2, true), s.k2_p) < 1e-5);
        // walk-off: θ = θ_c − q_x/k_p to first order
        let kth = |th: f64| c.k_jet(Polarization::Extraordinary, 2.0 * ws, th).unwrap().k;
        let dk_dth = richardson(&kth, c.cut_angle_rad, 1e-3, false);
        assert!(rel(-dk_dth / s.k_p, s.dkp_dqx) < 1e-5);
    }

    #[test]
    fn json_round_trip() {
        let (_, s) = setup();
        let back: PhaseMatchSummary = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(back, s);
    }
}
