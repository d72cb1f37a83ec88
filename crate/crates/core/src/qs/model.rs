//! Full and factorized second moments of the output field.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::envelopes::{f_coh, f_corr};
use super::kernel::{kernel_parts, KernelValue};
use crate::dispersion::{
    characteristic_scales, mismatch_taylor, CrystalSpec, FourierMode, PhaseMatchSummary, PhaseMatching, PumpSpec,
    SpaceTimePoint,
};
use crate::error::Result;
use crate::fourier::{pairwise_sum, FieldGrid, GridSpec};

/// How `D̄(w) = l_c D(w; −w)` is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MismatchModel {
    /// Sellmeier wavenumbers.
    #[default]
    Full,
    /// `Δ̄0 + ηΩ̄² − q̄²`.
    Taylor,
}

/// Phase factors of the moments.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PhaseConvention {
    /// Transit phases only, with `t = 0` at the pump exit.
    #[default]
    Transit,
    /// `φ(w) ± φ(w′)` and `F(w′, ξ)` kept exactly.
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PeakKind {
    Corr,
    Coh,
}

/// Shot-noise weight, auto- and cross-correlation terms of
/// `⟨δI(w) δI(w′)⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntensityTerms {
    /// Coefficient of `δ(w − w′)`, i.e. `⟨I(w)⟩ = G1(w, w)`.
    pub shot: f64,
    pub auto: f64,
    pub cross: f64,
}

/// Minimum samples per full 1/e pump width for ξ quadratures.
pub const MIN_SAMPLES_PER_WIDTH: f64 = 8.0;

#[derive(Clone, Debug, PartialEq)]
pub struct QsModel {
    pub pm: PhaseMatching,
    pub pump: PumpSpec,
    pub summary: PhaseMatchSummary,
    pub mismatch: MismatchModel,
    pub phases: PhaseConvention,
}

impl QsModel {
    pub fn new(crystal: CrystalSpec, pump: PumpSpec) -> Result<Self> {
        pump.validate()?;
        let summary = characteristic_scales(&crystal, &pump)?;
        Ok(QsModel {
            pm: PhaseMatching::new(crystal, pump.wavelength_um),
            pump,
            summary,
            mismatch: MismatchModel::Full,
            phases: PhaseConvention::Transit,
        })
    }

    pub fn with_mismatch(mut self, m: MismatchModel) -> Self {
        self.mismatch = m;
        self
    }

    pub fn with_phases(mut self, p: PhaseConvention) -> Self {
        self.phases = p;
        self
    }

    pub fn with_gain(mut self, g: f64) -> Self {
        self.pump.gain = g;
        self
    }

    pub fn gain(&self) -> f64 {
        self.pump.gain
    }

    /// Conjugate-mode mismatch `D̄(w)`.
    pub fn d_bar(&self, w: &FourierMode) -> Result<f64> {
        match self.mismatch {
            MismatchModel::Full => self.pm.mismatch(w),
            MismatchModel::Taylor => Ok(mismatch_taylor(w, &self.summary)),
        }
    }

    /// `φ(w) = (l_c/2)[k_p + k_sz(w) − k_sz(−w)]`.
    pub fn phi(&self, w: &FourierMode) -> Result<f64> {
        match self.mismatch {
            MismatchModel::Full => self.pm.phase(w),
            MismatchModel::Taylor => {
                Ok(0.5 * self.summary.length_um * self.summary.k_p
                    + self.summary.length_um * self.summary.k1_s * w.omega)
            }
        }
    }

    pub fn kernel_eval(&self, w: &FourierMode, xi: &SpaceTimePoint) -> Result<KernelValue> {
        let d = self.d_bar(w)?;
        let (f1, f2, gamma_sq) = kernel_parts(d, self.gain() * self.pump.amplitude(xi));
        Ok(KernelValue {
            f1,
            f2,
            gamma_sq,
            phi: self.phi(w)?,
        })
    }

    /// `F1(w, 0) F2(−w, 0)`.
    pub fn pair_amplitude(&self, w: &FourierMode) -> Result<Complex64> {
        let d = self.d_bar(w)?;
        let (f1, _, _) = kernel_parts(d, self.gain());
        let (_, f2m, _) = kernel_parts(self.d_bar(&-*w)?, self.gain());
        Ok(f1 * f2m)
    }

    /// `|F2(w, 0)|²`.
    pub fn photon_density(&self, w: &FourierMode) -> Result<f64> {
        Ok(kernel_parts(self.d_bar(w)?, self.gain()).1.norm_sqr())
    }

    fn transit_phase(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.summary.k_p * self.summary.length_um)
    }

    /// `F1(w, ξ) F2(−w, ξ)` sampled on the ξ grid.
    fn pair_integrand(&self, w: &FourierMode, grid: &GridSpec) -> Result<FieldGrid> {
        grid.check_resolves(&self.pump, MIN_SAMPLES_PER_WIDTH)?;
        let d = self.d_bar(w)?;
        let dm = self.d_bar(&-*w)?;
        let g = self.gain();
        Ok(FieldGrid::from_spacetime_fn(grid, |xi| {
            let ga = g * self.pump.amplitude(xi);
            kernel_parts(d, ga).0 * kernel_parts(dm, ga).1
        }))
    }

    /// `|F2(w, ξ)|²` sampled on the ξ grid.
    fn density_integrand(&self, w: &FourierMode, grid: &GridSpec) -> Result<FieldGrid> {
        grid.check_resolves(&self.pump, MIN_SAMPLES_PER_WIDTH)?;
        let d = self.d_bar(w)?;
        let g = self.gain();
        Ok(FieldGrid::from_spacetime_fn(grid, |xi| {
            Complex64::new(kernel_parts(d, g * self.pump.amplitude(xi)).1.norm_sqr(), 0.0)
        }))
    }

    /// `Ψ(w, w′)` by direct quadrature over the ξ grid.
    pub fn biphoton_full(&self, w: &FourierMode, w2: &FourierMode, grid: &GridSpec) -> Result<Complex64> {
        let w0 = *w + *w2;
        match self.phases {
            PhaseConvention::Transit => {
                let h = self.pair_integrand(w, grid)?;
                Ok(self.transit_phase() * ft_point(&h, &w0))
            }
            PhaseConvention::Exact => {
                grid.check_resolves(&self.pump, MIN_SAMPLES_PER_WIDTH)?;
                let (d1, d2) = (self.d_bar(w)?, self.d_bar(w2)?);
                let g = self.gain();
                let h = FieldGrid::from_spacetime_fn(grid, |xi| {
                    let ga = g * self.pump.amplitude(xi);
                    kernel_parts(d1, ga).0 * kernel_parts(d2, ga).1
                });
                let transit = self.summary.length_um * self.summary.k1_s * (w.omega + w2.omega);
                let ph = self.phi(w)? + self.phi(w2)? - transit;
                Ok(Complex64::from_polar(1.0, ph) * ft_point(&h, &w0))
            }
        }
    }

    /// `Ψ(w, −w + w0)` for every `w0` on the conjugate grid.
    pub fn biphoton_slice(&self, w: &FourierMode, grid: &GridSpec) -> Result<FieldGrid> {
        let ph = self.transit_phase();
        Ok(self.pair_integrand(w, grid)?.to_fourier().map(|v| v * ph))
    }

    /// `G1(w, w′)` by direct quadrature over the ξ grid.
    pub fn coherence_full(&self, w: &FourierMode, w2: &FourierMode, grid: &GridSpec) -> Result<Complex64> {
        let w0 = *w2 - *w;
        match self.phases {
            PhaseConvention::Transit => Ok(ft_point(&self.density_integrand(w, grid)?, &w0)),
            PhaseConvention::Exact => {
                grid.check_resolves(&self.pump, MIN_SAMPLES_PER_WIDTH)?;
                let (d1, d2) = (self.d_bar(w)?, self.d_bar(w2)?);
                let g = self.gain();
                let h = FieldGrid::from_spacetime_fn(grid, |xi| {
                    let ga = g * self.pump.amplitude(xi);
                    kernel_parts(d1, ga).1 * kernel_parts(d2, ga).1.conj()
                });
                let transit = self.summary.length_um * self.summary.k1_s * (w2.omega - w.omega);
                let ph = self.phi(w2)? - self.phi(w)? - transit;
                Ok(Complex64::from_polar(1.0, ph) * ft_point(&h, &w0))
            }
        }
    }

    /// `G1(w, w + w0)` for every `w0` on the conjugate grid.
    pub fn coherence_slice(&self, w: &FourierMode, grid: &GridSpec) -> Result<FieldGrid> {
        Ok(self.density_integrand(w, grid)?.to_fourier())
    }

    /// `F_β(ξ)` on the grid.
    pub fn envelope_grid(&self, kind: PeakKind, grid: &GridSpec) -> FieldGrid {
        let g = self.gain();
        FieldGrid::from_spacetime_fn(grid, |xi| {
            let a = self.pump.amplitude(xi);
            Complex64::new(
                match kind {
                    PeakKind::Corr => f_corr(g, a),
                    PeakKind::Coh => f_coh(g, a),
                },
                0.0,
            )
        })
    }

    /// `μ_β(w0)` on the conjugate grid.
    pub fn mu_peak_grid(&self, kind: PeakKind, grid: &GridSpec) -> Result<FieldGrid> {
        grid.check_resolves(&self.pump, MIN_SAMPLES_PER_WIDTH)?;
        Ok(self.envelope_grid(kind, grid).to_fourier())
    }

    /// `μ_β(w0)` at one point.
    pub fn mu_peak(&self, kind: PeakKind, w0: &FourierMode, grid: &GridSpec) -> Result<Complex64> {
        grid.check_resolves(&self.pump, MIN_SAMPLES_PER_WIDTH)?;
        Ok(ft_point(&self.envelope_grid(kind, grid), w0))
    }

    /// `(Ψ_fact(w, w′), G1_fact(w, w′))`.
    pub fn factorized_moments(
        &self,
        w: &FourierMode,
        w2: &FourierMode,
        grid: &GridSpec,
    ) -> Result<(Complex64, Complex64)> {
        let psi = self.transit_phase() * self.pair_amplitude(w)? * self.mu_peak(PeakKind::Corr, &(*w + *w2), grid)?;
        let g1 = self.photon_density(w)? * self.mu_peak(PeakKind::Coh, &(*w2 - *w), grid)?;
        Ok((psi, g1))
    }

    /// Space-time correlation and coherence peaks, as functions of
    /// `Δξ = ξ′ − ξ`, from `F1(w,0)F2(−w,0)` and `|F2(w,0)|²` sampled on the
    /// conjugate (Fourier) grid of `grid`.
    pub fn spacetime_peaks(&self, grid: &GridSpec) -> Result<(FieldGrid, FieldGrid)> {
        let norm = 1.0 / grid.two_pi_power();
        let pair = FieldGrid::try_from_fourier_fn(grid, |w| self.pair_amplitude(w))?;
        let dens = FieldGrid::try_from_fourier_fn(grid, |w| Ok(Complex64::new(self.photon_density(w)?, 0.0)))?;
        Ok((
            pair.to_spacetime().map(|v| v * norm),
            dens.to_spacetime().map(|v| v * norm),
        ))
    }

    /// `(ψ(ξ, ξ′), G1(ξ, ξ′))` of the factorized model; the Fourier integrals
    /// run over the conjugate grid of `grid`.
    pub fn spacetime_moments(
        &self,
        xi: &SpaceTimePoint,
        xi2: &SpaceTimePoint,
        grid: &GridSpec,
    ) -> Result<(Complex64, Complex64)> {
        let d = *xi2 - *xi;
        let norm = grid.conjugate_cell() / grid.two_pi_power();
        let terms: Vec<(Complex64, Complex64)> = (0..grid.len())
            .into_par_iter()
            .map(|i| {
                let w = grid.mode(i);
                let e = Complex64::from_polar(1.0, w.dot(&d));
                Ok((e * self.pair_amplitude(&w)?, e * self.photon_density(&w)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let (ec, eh) = super::envelopes::envelopes(&self.pump, xi);
        let psi = complex_sum(terms.iter().map(|t| t.0)) * norm * ec;
        let g1 = complex_sum(terms.iter().map(|t| t.1)) * norm * eh;
        Ok((psi, g1))
    }

    pub fn intensity_correlation(&self, w: &FourierMode, w2: &FourierMode, grid: &GridSpec) -> Result<IntensityTerms> {
        Ok(IntensityTerms {
            shot: self.coherence_full(w, w, grid)?.re,
            auto: self.coherence_full(w, w2, grid)?.norm_sqr(),
            cross: self.biphoton_full(w, w2, grid)?.norm_sqr(),
        })
    }
}

/// `∫ dⁿξ/(2π)ⁿ e^{−i w0·ξ} h(ξ)` by direct summation.
pub fn ft_point(h: &FieldGrid, w0: &FourierMode) -> Complex64 {
    let spec = &h.spec;
    let terms: Vec<Complex64> = (0..spec.len())
        .into_par_iter()
        .map(|i| h.data[i] * Complex64::from_polar(1.0, -w0.dot(&spec.point(i))))
        .collect();
    complex_sum(terms.into_iter()) * spec.cell() / (2.0 * PI).powi(spec.axes.len() as i32)
}

pub(crate) fn complex_sum(it: impl Iterator<Item = Complex64>) -> Complex64 {
    let (re, im): (Vec<f64>, Vec<f64>) = it.map(|v| (v.re, v.im)).unzip();
    Complex64::new(pairwise_sum(&re), pairwise_sum(&im))
}
