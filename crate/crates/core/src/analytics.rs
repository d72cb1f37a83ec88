//! Gain-scaling laws for spectral bandwidths, correlation widths and
//! space-time narrowing, plus numeric width extraction to check them.

use std::f64::consts::{LN_2, SQRT_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dispersion::{FourierMode, PumpSpec};
use crate::error::{Error, Result};
use crate::fourier::{AxisKind, GridSpec};
use crate::qs::{PeakKind, QsModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    SpectrumG1,
    SpectrumPsi,
    MuCoh,
    MuCorr,
    EnvCoh,
    EnvCorr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WidthAxis {
    Omega,
    Q,
    T,
    X,
}

impl WidthAxis {
    pub fn units(self) -> &'static str {
        match self {
            WidthAxis::Omega => "rad/fs",
            WidthAxis::Q => "rad/um",
            WidthAxis::T => "fs",
            WidthAxis::X => "um",
        }
    }
}

/// An analytic width next to its numeric counterpart.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WidthReport {
    pub quantity: Quantity,
    pub axis: WidthAxis,
    pub analytic: f64,
    pub numeric: f64,
}

impl WidthReport {
    pub fn rel_gap(&self) -> f64 {
        (self.numeric - self.analytic) / self.analytic
    }
}

/// `g − tanh g`, by series for small `g`.
fn g_minus_tanh(g: f64) -> f64 {
    if g.abs() < 0.05 {
        let g2 = g * g;
        g * g2 * (1.0 / 3.0 - g2 * (2.0 / 15.0 - g2 * (17.0 / 315.0 - g2 * 62.0 / 2835.0)))
    } else {
        g - g.tanh()
    }
}

/// `4 g² tanh(k g) ln 2 / (g − tanh g)` with `k = 1` for the intensity
/// spectrum and `k = 2` for the biphoton amplitude.
fn band_core(quantity: Quantity, g: f64) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::Domain(format!(
            "bandwidth law is singular at g = {g}; use the g -> 0 limit"
        )));
    }
    let k = match quantity {
        Quantity::SpectrumG1 => 1.0,
        Quantity::SpectrumPsi => 2.0,
        _ => return Err(Error::Domain(format!("no bandwidth law for {quantity:?}"))),
    };
    Ok(4.0 * g * g * (k * g).tanh() * LN_2 / g_minus_tanh(g))
}

/// Central-band HWHM in units of `Ω_GVD` (or `q_diff`).
pub fn central_band_law(quantity: Quantity, g: f64) -> Result<f64> {
    Ok(band_core(quantity, g)?.powf(0.25))
}

/// `g → 0` value of [`central_band_law`]: `(12 ln 2)^{1/4}` for the
/// intensity spectrum and `(24 ln 2)^{1/4}` for the biphoton amplitude.
pub fn central_band_limit(quantity: Quantity) -> Result<f64> {
    match quantity {
        Quantity::SpectrumG1 => Ok((12.0 * LN_2).powf(0.25)),
        Quantity::SpectrumPsi => Ok((24.0 * LN_2).powf(0.25)),
        _ => Err(Error::Domain(format!("no bandwidth law for {quantity:?}"))),
    }
}

/// HWHM in the arms of the X-spectrum at scaled matching frequency
/// `pm_bar = Ω_pm/Ω_GVD ≫ 1`.
pub fn arm_band_law(quantity: Quantity, g: f64, pm_bar: f64) -> Result<f64> {
    if !(pm_bar > 0.0) {
        return Err(Error::Domain(format!(
            "arm law needs a positive matching frequency, got {pm_bar}"
        )));
    }
    Ok(band_core(quantity, g)?.sqrt() / (2.0 * pm_bar))
}

/// `(σ_coh, σ_corr) / σ_pump = (√(2g/tanh g), √(2g/tanh 2g))`.
pub fn sigma_ratios(g: f64) -> Result<(f64, f64)> {
    if !(g >= 0.0) {
        return Err(Error::Domain(format!("gain must be >= 0, got {g}")));
    }
    // x/tanh x = 1 + x²/3 − x⁴/45 + ...
    let x_coth = |x: f64| {
        if x < 1e-4 {
            1.0 + x * x / 3.0
        } else {
            x / x.tanh()
        }
    };
    Ok(((2.0 * x_coth(g)).sqrt(), x_coth(2.0 * g).sqrt()))
}

/// rms widths of `μ_coh`, `μ_corr` along Ω and q for a Gaussian pump.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WidthSigmas {
    pub coh_omega: f64,
    pub corr_omega: f64,
    pub coh_q: f64,
    pub corr_q: f64,
}

pub fn width_sigmas(g: f64, pump: &PumpSpec) -> Result<WidthSigmas> {
    let (coh, corr) = sigma_ratios(g)?;
    Ok(WidthSigmas {
        coh_omega: coh * pump.sigma_omega(),
        corr_omega: corr * pump.sigma_omega(),
        coh_q: coh * pump.sigma_q(),
        corr_q: corr * pump.sigma_q(),
    })
}

/// `(√(tanh 2g / 2g), √(tanh g / g))`: space-time narrowing of `F_corr` and
/// `F_coh` relative to the pump.
pub fn narrowing_factors(g: f64) -> Result<(f64, f64)> {
    let (coh, corr) = sigma_ratios(g)?;
    Ok((1.0 / corr, SQRT_2 / coh))
}

/// Half width at half maximum of a sampled, single-peaked profile. Crossings
/// are located by bisection on a local cubic interpolant; on plateaus the
/// outermost crossing wins.
pub fn hwhm(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() || xs.len() < 4 {
        return Err(Error::Domain("hwhm needs at least four matching samples".into()));
    }
    let (ip, &peak) = ys
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty");
    let half = 0.5 * peak;
    let right = (ip..ys.len() - 1).rev().find(|&i| ys[i] >= half && ys[i + 1] < half);
    let left = (1..=ip).find(|&i| ys[i] >= half && ys[i - 1] < half);
    let (Some(r), Some(l)) = (right, left) else {
        return Err(Error::Domain(
            "profile does not fall below half maximum inside the window".into(),
        ));
    };
    let xr = crossing(xs, ys, r, r + 1, half);
    let xl = crossing(xs, ys, l - 1, l, half);
    Ok(0.5 * (xr - xl))
}

fn crossing(xs: &[f64], ys: &[f64], a: usize, b: usize, level: f64) -> f64 {
    let lo = a.saturating_sub(1).min(xs.len() - 4);
    let (px, py) = (&xs[lo..lo + 4], &ys[lo..lo + 4]);
    let cubic = |x: f64| {
        let mut s = 0.0;
        for i in 0..4 {
            let mut l = 1.0;
            for j in 0..4 {
                if i != j {
                    l *= (x - px[j]) / (px[i] - px[j]);
                }
            }
            s += py[i] * l;
        }
        s
    };
    let (mut x0, mut x1) = (xs[a], xs[b]);
    let f0 = cubic(x0) - level;
    for _ in 0..100 {
        let m = 0.5 * (x0 + x1);
        if (cubic(m) - level).signum() == f0.signum() {
            x0 = m;
        } else {
            x1 = m;
        }
    }
    0.5 * (x0 + x1)
}

/// `(G1(w,w), Ψ(w,−w))` in factorized form, with `μ_β(0)` from the ξ grid.
pub fn spectra(model: &QsModel, w: &FourierMode, grid: &GridSpec) -> Result<(f64, Complex64)> {
    let mu_coh = model.mu_peak(PeakKind::Coh, &FourierMode::ZERO, grid)?.re;
    let mu_corr = model.mu_peak(PeakKind::Corr, &FourierMode::ZERO, grid)?.re;
    Ok((model.photon_density(w)? * mu_coh, model.pair_amplitude(w)? * mu_corr))
}

/// Numeric central-band HWHM of `G1(w,w)` or `|Ψ(w,−w)|` along Ω (at q = 0)
/// or along q_x (at Ω = 0), in units of `Ω_GVD` or `q_diff`.
pub fn numeric_band_hwhm(
    model: &QsModel,
    quantity: Quantity,
    axis: WidthAxis,
    samples: usize,
    span: f64,
) -> Result<f64> {
    let (scale, along): (f64, fn(f64) -> FourierMode) = match axis {
        WidthAxis::Omega => (model.summary.omega_gvd, FourierMode::temporal),
        WidthAxis::Q => (model.summary.q_diff, |q| FourierMode::new(q, 0.0, 0.0)),
        _ => return Err(Error::Domain("spectral widths live on the Omega or Q axis".into())),
    };
    let xs: Vec<f64> = (0..samples)
        .map(|i| span * (2.0 * i as f64 / (samples - 1) as f64 - 1.0))
        .collect();
    let ys = xs
        .iter()
        .map(|&x| {
            let w = along(x * scale);
            match quantity {
                Quantity::SpectrumG1 => model.photon_density(&w),
                Quantity::SpectrumPsi => Ok(model.pair_amplitude(&w)?.norm()),
                _ => Err(Error::Domain(format!("{quantity:?} is not a spectrum"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    hwhm(&xs, &ys)
}

/// rms width `σ² = ∫ w_i² μ_β / ∫ μ_β` along one axis, from the FFT of the
/// envelope on `grid`.
pub fn mu_rms_width(model: &QsModel, kind: PeakKind, axis: AxisKind, grid: &GridSpec) -> Result<f64> {
    let mu = model.mu_peak_grid(kind, grid)?;
    let k = grid
        .axes
        .iter()
        .position(|a| a.kind == axis)
        .ok_or_else(|| Error::Domain(format!("grid has no {} axis", axis.name())))?;
    let (mut m0, mut m2) = (Vec::with_capacity(mu.data.len()), Vec::with_capacity(mu.data.len()));
    for (i, v) in mu.data.iter().enumerate() {
        let c = mu.coords(i);
        let x = match grid.axes[k].kind {
            AxisKind::X => c[0],
            AxisKind::Y => c[1],
            AxisKind::T => c[2],
        };
        m0.push(v.re);
        m2.push(v.re * x * x);
    }
    use crate::fourier::pairwise_sum;
    Ok((pairwise_sum(&m2) / pairwise_sum(&m0)).sqrt())
}

/// Space-time HWHM of `F_coh` and `|F_corr|²` relative to the pump
/// intensity HWHM, by direct root-finding on a Gaussian pump profile.
pub fn numeric_narrowing(g: f64) -> Result<(f64, f64)> {
    if !(g >= 0.0) {
        return Err(Error::Domain(format!("gain must be >= 0, got {g}")));
    }
    if g == 0.0 {
        return Ok((1.0, 1.0));
    }
    // Half maximum of an envelope E(α(t)), α = e^{−t²}, is reached where
    // α = α½, i.e. at t = √(−ln α½); the pump intensity has α½ = 2^{−1/2}.
    let pump = (0.5 * LN_2).sqrt();
    let coh_alpha = (g.sinh() / SQRT_2).asinh() / g;
    let corr_alpha = if 2.0 * g > 700.0 {
        1.0 - LN_2 / (4.0 * g)
    } else {
        ((2.0 * g).sinh() / SQRT_2).asinh() / (2.0 * g)
    };
    let coh_alpha = if g > 700.0 { 1.0 - LN_2 / (2.0 * g) } else { coh_alpha };
    Ok(((-corr_alpha.ln()).sqrt() / pump, (-coh_alpha.ln()).sqrt() / pump))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_law_scalar_oracle() {
        let g = 1.0f64;
        let v = (4.0 * g * g * g.tanh() * LN_2 / (g - g.tanh())).powf(0.25);
        assert!((central_band_law(Quantity::SpectrumG1, 1.0).unwrap() - v).abs() < 1e-14);
        // coth form of the same law
        let coth_form = (4.0 * g * g * LN_2 / (g / g.tanh() - 1.0)).powf(0.25);
        assert!((v - coth_form).abs() < 1e-12);
    }

    #[test]
    fn central_law_small_gain_limit() {
        for q in [Quantity::SpectrumG1, Quantity::SpectrumPsi] {
            let lim = central_band_limit(q).unwrap();
            assert!((central_band_law(q, 1e-6).unwrap() / lim - 1.0).abs() < 1e-9);
            assert!((central_band_law(q, 0.03).unwrap() / central_band_law(q, 0.0500001).unwrap()) > 0.99);
        }
        assert!(matches!(
            central_band_law(Quantity::SpectrumG1, 0.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn central_law_grows_as_fourth_root() {
        let r = |g: f64| central_band_law(Quantity::SpectrumG1, g).unwrap() / g.powf(0.25);
        assert!((r(20.0) / r(40.0) - 1.0).abs() < 0.02);
        assert!((r(40.0) / r(80.0) - 1.0).abs() < 0.02);
        let a = |g: f64| arm_band_law(Quantity::SpectrumG1, g, 3.5).unwrap() / g.sqrt();
        assert!((a(20.0) / a(40.0) - 1.0).abs() < 0.05);
    }

    #[test]
    fn psi_band_is_broader_and_converges() {
        let mut last = f64::INFINITY;
        for i in 1..=60 {
            let g = 0.25 * i as f64;
            let r = central_band_law(Quantity::SpectrumPsi, g).unwrap()
                / central_band_law(Quantity::SpectrumG1, g).unwrap();
            assert!(r >= 1.0 && r <= last);
            last = r;
        }
        assert!(last - 1.0 < 1e-6);
    }

    #[test]
    fn sigma_limits() {
        let (coh, corr) = sigma_ratios(0.0).unwrap();
        assert!((coh - SQRT_2).abs() < 1e-15 && (corr - 1.0).abs() < 1e-15);
        let (coh, corr) = sigma_ratios(30.0).unwrap();
        assert!((coh / 60f64.sqrt() - 1.0).abs() < 0.03);
        assert!((corr / 60f64.sqrt() - 1.0).abs() < 0.03);
    }

    #[test]
    fn narrowing_is_monotone_and_bounded() {
        assert_eq!(narrowing_factors(0.0).unwrap(), (1.0, 1.0));
        let mut last = (1.0, 1.0);
        for i in 1..=100 {
            let f = narrowing_factors(0.1 * i as f64).unwrap();
            assert!(f.0 <= last.0 && f.1 <= last.1 && f.0 <= 1.0 && f.1 <= 1.0);
            last = f;
        }
    }

    #[test]
    fn hwhm_of_gaussian_and_plateau() {
        let xs: Vec<f64> = (0..201).map(|i| -10.0 + 0.1 * i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| (-x * x / 8.0).exp()).collect();
        let exact = (8.0 * LN_2).sqrt();
        assert!((hwhm(&xs, &ys).unwrap() - exact).abs() < 1e-5);
        // a side lobe above half maximum extends the width outward
        let ys2: Vec<f64> = xs
            .iter()
            .map(|&x| {
                if (x - 6.0).abs() < 0.5 {
                    0.6
                } else {
                    (-x * x / 8.0).exp()
                }
            })
            .collect();
        assert!(hwhm(&xs, &ys2).unwrap() > 0.5 * (6.3 + exact));
    }

    #[test]
    fn numeric_narrowing_tracks_law() {
        for i in 1..=60 {
            let g = 0.1 * i as f64;
            let (nc, nh) = numeric_narrowing(g).unwrap();
            let (lc, lh) = narrowing_factors(g).unwrap();
            assert!((nc / lc - 1.0).abs() < 0.05 && (nh / lh - 1.0).abs() < 0.05, "g = {g}");
        }
    }
}
