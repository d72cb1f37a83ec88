use nalgebra::DMatrix;
use num_complex::Complex64;

use super::sampler::{SpeckleConfig, SpeckleSampler};
use super::{Pixel, PixelPair, VACUUM_LEVEL};
use crate::dispersion::FourierMode;

/// Raw Wigner sums of one block of shots.
#[derive(Clone, Debug)]
pub(crate) struct Accumulator {
    shots: usize,
    sum: Vec<f64>,
    sum_sq: Vec<f64>,
    products: Option<DMatrix<f64>>,
    pix_sum: Vec<f64>,
    pix_prod: DMatrix<f64>,
    pub(crate) first_shot: Option<Vec<f64>>,
}

impl Accumulator {
    pub(crate) fn new(modes: usize, pixels: &[Pixel], products: bool) -> Self {
        Accumulator {
            shots: 0,
            sum: vec![0.0; modes],
            sum_sq: vec![0.0; modes],
            products: products.then(|| DMatrix::zeros(modes, modes)),
            pix_sum: vec![0.0; pixels.len()],
            pix_prod: DMatrix::zeros(pixels.len(), pixels.len()),
            first_shot: None,
        }
    }

    /// `out` holds one shot per column.
    pub(crate) fn add_block(&mut self, out: &DMatrix<Complex64>, pixels: &[Pixel]) {
        let intens = out.map(|v| v.norm_sqr());
        for (k, row) in intens.row_iter().enumerate() {
            self.sum[k] += row.sum();
            self.sum_sq[k] += row.iter().map(|v| v * v).sum::<f64>();
        }
        if let Some(p) = self.products.as_mut() {
            p.gemm(1.0, &intens, &intens.transpose(), 1.0);
        }
        if !pixels.is_empty() {
            let s = DMatrix::from_fn(pixels.len(), intens.ncols(), |p, c| {
                pixels[p].modes.iter().map(|&k| intens[(k, c)]).sum::<f64>()
            });
            for (p, row) in s.row_iter().enumerate() {
                self.pix_sum[p] += row.sum();
            }
            self.pix_prod.gemm(1.0, &s, &s.transpose(), 1.0);
        }
        self.shots += intens.ncols();
    }

    fn merge(mut self, other: Accumulator) -> Accumulator {
        self.shots += other.shots;
        for (a, b) in self.sum.iter_mut().zip(&other.sum) {
            *a += b;
        }
        for (a, b) in self.sum_sq.iter_mut().zip(&other.sum_sq) {
            *a += b;
        }
        if let (Some(a), Some(b)) = (self.products.as_mut(), other.products.as_ref()) {
            *a += b;
        }
        for (a, b) in self.pix_sum.iter_mut().zip(&other.pix_sum) {
            *a += b;
        }
        self.pix_prod += &other.pix_prod;
        self.first_shot = self.first_shot.or(other.first_shot);
        self
    }

    /// Fixed pairwise reduction tree over the block order.
    pub(crate) fn merge_tree(mut accs: Vec<Accumulator>) -> Option<Accumulator> {
        while accs.len() > 1 {
            let mut next = Vec::with_capacity(accs.len().div_ceil(2));
            let mut it = accs.into_iter();
            while let Some(a) = it.next() {
                next.push(match it.next() {
                    Some(b) => a.merge(b),
                    None => a,
                });
            }
            accs = next;
        }
        accs.pop()
    }
}

/// Ensemble statistics of a Monte-Carlo run, in units of photons per
/// discrete mode.
#[derive(Clone, Debug)]
pub struct ShotEnsemble {
    pub modes: Vec<FourierMode>,
    pub d_w: f64,
    pub shots: usize,
    pub seed: u64,
    /// Wigner level of a vacuum mode, subtracted by the ordering corrections.
    pub vacuum_level: f64,
    /// `E_W|b_k|²`.
    pub mean: Vec<f64>,
    /// `Var_W |b_k|²`.
    pub variance: Vec<f64>,
    /// `E_W[|b_j|²|b_k|²]`, when tracked.
    pub products: Option<DMatrix<f64>>,
    pub pixels: Vec<Pixel>,
    /// Wigner means and covariance of the pixel sums.
    pub pixel_mean: Vec<f64>,
    pub pixel_cov: DMatrix<f64>,
    /// `|b_k|²` of shot 0.
    pub first_shot: Vec<f64>,
}

/// Normally ordered photon-number moments of the pixels.
#[derive(Clone, Debug, PartialEq)]
pub struct PhotonMoments {
    pub mean: Vec<f64>,
    pub covariance: DMatrix<f64>,
    /// Estimates that came out negative, by pixel name. Not clamped.
    pub negative: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NrfEstimate {
    pub nrf: f64,
    pub mean_signal: f64,
    pub mean_idler: f64,
    pub var_difference: f64,
    /// Standard error of `nrf` from the sampling error of the Wigner
    /// variance, in the Gaussian approximation `Var·√(2/(shots−1))`.
    pub sigma: f64,
}

/// Estimate with its Monte-Carlo standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub sigma: f64,
}

impl ShotEnsemble {
    pub(crate) fn from_accumulator(
        acc: Accumulator,
        sampler: &SpeckleSampler,
        cfg: &SpeckleConfig,
        pixels: &[Pixel],
    ) -> Self {
        let n = acc.shots.max(1) as f64;
        let mean: Vec<f64> = acc.sum.iter().map(|s| s / n).collect();
        let variance = acc.sum_sq.iter().zip(&mean).map(|(s, m)| s / n - m * m).collect();
        let pixel_mean: Vec<f64> = acc.pix_sum.iter().map(|s| s / n).collect();
        let pixel_cov = DMatrix::from_fn(pixels.len(), pixels.len(), |p, q| {
            acc.pix_prod[(p, q)] / n - pixel_mean[p] * pixel_mean[q]
        });
        ShotEnsemble {
            modes: sampler.modes.clone(),
            d_w: sampler.d_w,
            shots: acc.shots,
            seed: cfg.seed,
            vacuum_level: VACUUM_LEVEL,
            mean,
            variance,
            products: acc.products.map(|p| p / n),
            pixels: pixels.to_vec(),
            pixel_mean,
            pixel_cov,
            first_shot: acc.first_shot.unwrap_or_default(),
        }
    }

    /// Mean photon number per mode, `E_W|b|² − 1/2`.
    pub fn photon_spectrum(&self) -> Vec<Estimate> {
        let n = self.shots as f64;
        self.mean
            .iter()
            .zip(&self.variance)
            .map(|(m, v)| Estimate {
                value: m - self.vacuum_level,
                sigma: (v / n).sqrt(),
            })
            .collect()
    }

    /// Photon spectrum divided by `Δw`, comparable with `G1(w, w)`.
    pub fn coherence_spectrum(&self) -> Vec<Estimate> {
        self.photon_spectrum()
            .into_iter()
            .map(|e| Estimate {
                value: e.value / self.d_w,
                sigma: e.sigma / self.d_w,
            })
            .collect()
    }

    /// Symmetric-to-normal ordering of the pixel moments:
    /// `⟨N⟩ = E_W[S] − M/2`, `Cov(N_p, N_q) = Cov_W(S_p, S_q) − |p∩q|/4`.
    pub fn ordering_corrections(&self) -> PhotonMoments {
        let p = &self.pixels;
        let mean: Vec<f64> = p
            .iter()
            .zip(&self.pixel_mean)
            .map(|(px, m)| m - self.vacuum_level * px.len() as f64)
            .collect();
        let covariance = DMatrix::from_fn(p.len(), p.len(), |a, b| {
            self.pixel_cov[(a, b)] - 0.25 * overlap(&p[a], &p[b]) as f64
        });
        let mut negative = Vec::new();
        for (k, px) in p.iter().enumerate() {
            if mean[k] < 0.0 || covariance[(k, k)] < 0.0 {
                negative.push(px.name.clone());
            }
        }
        PhotonMoments {
            mean,
            covariance,
            negative,
        }
    }

    /// `Var(N_s − N_i)/⟨N_s + N_i⟩` for pixels `signal` and `idler` (indices
    /// into [`ShotEnsemble::pixels`]).
    pub fn noise_reduction_factor(&self, signal: usize, idler: usize) -> NrfEstimate {
        let m = self.ordering_corrections();
        let c = &m.covariance;
        let var = c[(signal, signal)] + c[(idler, idler)] - 2.0 * c[(signal, idler)];
        let w = &self.pixel_cov;
        let var_w = w[(signal, signal)] + w[(idler, idler)] - 2.0 * w[(signal, idler)];
        let sigma = var_w * (2.0 / (self.shots.max(2) - 1) as f64).sqrt() / (m.mean[signal] + m.mean[idler]);
        NrfEstimate {
            sigma,
            nrf: var / (m.mean[signal] + m.mean[idler]),
            mean_signal: m.mean[signal],
            mean_idler: m.mean[idler],
            var_difference: var,
        }
    }

    /// Normally ordered intensity covariance `⟨:δN_j δN_k:⟩`; `None` unless
    /// products were tracked.
    pub fn intensity_covariance(&self, j: usize, k: usize) -> Option<Estimate> {
        let p = self.products.as_ref()?;
        let cov = p[(j, k)] - self.mean[j] * self.mean[k];
        let mut value = cov;
        if j == k {
            value -= 0.25 + (self.mean[j] - self.vacuum_level);
        }
        let sigma = ((self.variance[j] * self.variance[k] + cov * cov) / self.shots as f64).sqrt();
        Some(Estimate { value, sigma })
    }

    /// Auto (`w′ = w + w0`) and cross (`w′ = −w + w0`) intensity-correlation
    /// profiles around mode `k`, scaled by `1/Δw²` so that they compare with
    /// `|G1|²` and `|Ψ|²`. Entries are `(w0, estimate)` over all modes `w′`.
    pub fn correlation_peaks(&self, k: usize) -> Option<(Profile, Profile)> {
        self.products.as_ref()?;
        let s = 1.0 / (self.d_w * self.d_w);
        let w = self.modes[k];
        let mut auto = Vec::with_capacity(self.modes.len());
        let mut cross = Vec::with_capacity(self.modes.len());
        for (j, wj) in self.modes.iter().enumerate() {
            let e = self.intensity_covariance(k, j)?;
            let e = Estimate {
                value: e.value * s,
                sigma: e.sigma * s,
            };
            auto.push((*wj - w, e));
            cross.push((*wj + w, e));
        }
        Some((auto, cross))
    }
}

fn overlap(a: &Pixel, b: &Pixel) -> usize {
    a.modes.iter().filter(|m| b.modes.contains(m)).count()
}

/// `(offset, estimate)` pairs of one correlation profile.
pub type Profile = Vec<(FourierMode, Estimate)>;

/// Exact second moments of the sampled Gaussian field.
#[derive(Clone, Debug)]
pub struct GaussianMoments {
    /// `⟨b_j† b_k⟩` (as `⟨b_j* b_k⟩_W − δ_jk/2`).
    pub normal: DMatrix<Complex64>,
    /// `⟨b_j b_k⟩`.
    pub anomalous: DMatrix<Complex64>,
}

impl GaussianMoments {
    pub fn photon_number(&self, k: usize) -> f64 {
        self.normal[(k, k)].re
    }

    /// Normally ordered `Cov(N_p, N_q)` of two pixels by Gaussian moment
    /// factorisation.
    pub fn pixel_covariance(&self, p: &Pixel, q: &Pixel) -> f64 {
        let mut c = 0.0;
        for &j in &p.modes {
            for &k in &q.modes {
                let w = self.normal[(j, k)] + if j == k { 0.5 } else { 0.0 };
                c += w.norm_sqr() + self.anomalous[(j, k)].norm_sqr();
            }
        }
        c - 0.25 * overlap(p, q) as f64
    }

    pub fn pixel_mean(&self, p: &Pixel) -> f64 {
        p.modes.iter().map(|&k| self.photon_number(k)).sum()
    }

    pub fn noise_reduction_factor(&self, pair: &PixelPair) -> f64 {
        let (s, i) = (&pair.signal, &pair.idler);
        let var = self.pixel_covariance(s, s) + self.pixel_covariance(i, i) - 2.0 * self.pixel_covariance(s, i);
        var / (self.pixel_mean(s) + self.pixel_mean(i))
    }
}

impl ShotEnsemble {
    /// Cross profile summed over the mode indices `rows`, binned by the
    /// temporal offset `Ω0 = Ω + Ω′` in units of `Δw`. Sorted by `Ω0`.
    pub fn summed_cross_profile(&self, rows: &[usize]) -> Option<Vec<(f64, f64)>> {
        let mut bins: std::collections::BTreeMap<i64, f64> = std::collections::BTreeMap::new();
        for &k in rows {
            let (_, cross) = self.correlation_peaks(k)?;
            for (w0, e) in cross {
                *bins.entry((w0.omega / self.d_w).round() as i64).or_insert(0.0) += e.value;
            }
        }
        Some(bins.into_iter().map(|(i, v)| (i as f64 * self.d_w, v)).collect())
    }
}
