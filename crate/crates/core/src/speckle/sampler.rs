use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ensemble::{Accumulator, GaussianMoments, ShotEnsemble};
use super::Pixel;
use crate::dispersion::FourierMode;
use crate::error::Result;
use crate::fourier::{Domain, FieldGrid, GridSpec};
use crate::qs::model::MIN_SAMPLES_PER_WIDTH;
use crate::qs::QsModel;

type CMatrix = DMatrix<Complex64>;

/// Intensity products are tracked only up to this many modes.
pub const MAX_PRODUCT_MODES: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpeckleConfig {
    pub shots: usize,
    pub seed: u64,
    /// Shots per deterministic accumulation block.
    pub block: usize,
    /// Phase applied to every input sample.
    pub global_phase: f64,
    /// Accumulate the full mode-by-mode intensity product matrix.
    pub track_products: bool,
}

impl Default for SpeckleConfig {
    fn default() -> Self {
        SpeckleConfig {
            shots: 10_000,
            seed: 1,
            block: 64,
            global_phase: 0.0,
            track_products: true,
        }
    }
}

/// Dense discretisation of `A_out(w) = FT[F1 a + F2 a*]`.
#[derive(Clone, Debug)]
pub struct SpeckleSampler {
    pub grid: GridSpec,
    pub modes: Vec<FourierMode>,
    pub d_w: f64,
    t1: CMatrix,
    t2: CMatrix,
    input_sigma: f64,
}

impl SpeckleSampler {
    /// `grid` is the ξ grid; the output modes live on its conjugate grid.
    pub fn new(model: &QsModel, grid: &GridSpec) -> Result<Self> {
        grid.check_resolves(&model.pump, MIN_SAMPLES_PER_WIDTH)?;
        let n = grid.len();
        let modes: Vec<FourierMode> = (0..n).map(|k| grid.mode(k)).collect();
        let d_w = grid.conjugate_cell();
        let pref = grid.cell() / grid.two_pi_power().sqrt() * d_w.sqrt();
        let g = model.gain();
        let alpha: Vec<f64> = (0..n).map(|j| g * model.pump.amplitude(&grid.point(j))).collect();
        let rows = modes
            .par_iter()
            .map(|w| {
                let d = model.d_bar(w)?;
                let mut r1 = Vec::with_capacity(n);
                let mut r2 = Vec::with_capacity(n);
                for (j, &ga) in alpha.iter().enumerate() {
                    let (f1, f2, _) = crate::qs::kernel_parts(d, ga);
                    let ph = Complex64::from_polar(pref, -w.dot(&grid.point(j)));
                    r1.push(ph * f1);
                    r2.push(ph * f2);
                }
                Ok((r1, r2))
            })
            .collect::<Result<Vec<_>>>()?;
        let t1 = CMatrix::from_fn(n, n, |k, j| rows[k].0[j]);
        let t2 = CMatrix::from_fn(n, n, |k, j| rows[k].1[j]);
        Ok(SpeckleSampler {
            grid: grid.clone(),
            modes,
            d_w,
            t1,
            t2,
            input_sigma: (1.0 / (4.0 * grid.cell())).sqrt(),
        })
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    /// Input samples of shot `shot_index`, one column per shot.
    fn inputs(&self, seed: u64, first: usize, count: usize, phase: f64) -> CMatrix {
        let n = self.len();
        let rot = Complex64::from_polar(self.input_sigma, phase);
        let mut a = CMatrix::zeros(n, count);
        for c in 0..count {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream((first + c) as u64);
            for r in 0..n {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                a[(r, c)] = rot * Complex64::new(re, im);
            }
        }
        a
    }

    fn outputs(&self, a: &CMatrix) -> CMatrix {
        &self.t1 * a + &self.t2 * a.map(|v| v.conj())
    }

    /// Output amplitudes `A_out(w)` of one shot on the conjugate grid.
    pub fn sample_shot(&self, seed: u64, shot_index: usize) -> FieldGrid {
        let b = self.outputs(&self.inputs(seed, shot_index, 1, 0.0));
        let s = 1.0 / self.d_w.sqrt();
        FieldGrid {
            spec: self.grid.clone(),
            domain: Domain::Fourier,
            data: b.column(0).iter().map(|v| v * s).collect(),
        }
    }

    /// Runs `cfg.shots` shots in fixed-size blocks and merges the block
    /// accumulators in a fixed pairwise tree.
    pub fn run(&self, cfg: &SpeckleConfig, pixels: &[Pixel]) -> Result<ShotEnsemble> {
        for p in pixels {
            if p.is_empty() {
                return Err(crate::Error::EmptyPixel(p.name.clone()));
            }
        }
        let block = cfg.block.max(1);
        let n_blocks = cfg.shots.div_ceil(block);
        let products = cfg.track_products && self.len() <= MAX_PRODUCT_MODES;
        let accs: Vec<Accumulator> = (0..n_blocks)
            .into_par_iter()
            .map(|b| {
                let first = b * block;
                let count = block.min(cfg.shots - first);
                let out = self.outputs(&self.inputs(cfg.seed, first, count, cfg.global_phase));
                let mut acc = Accumulator::new(self.len(), pixels, products);
                acc.add_block(&out, pixels);
                if first == 0 {
                    acc.first_shot = Some(out.column(0).iter().map(|v| v.norm_sqr()).collect());
                }
                acc
            })
            .collect();
        let acc = Accumulator::merge_tree(accs).unwrap_or_else(|| Accumulator::new(self.len(), pixels, products));
        Ok(ShotEnsemble::from_accumulator(acc, self, cfg, pixels))
    }

    /// Exact second moments of the sampled output: `⟨b_j* b_k⟩_W − δ_jk/2`
    /// and `⟨b_j b_k⟩_W`.
    pub fn exact_moments(&self) -> GaussianMoments {
        let v = Complex64::new(2.0 * self.input_sigma * self.input_sigma, 0.0);
        let (t1, t2) = (&self.t1, &self.t2);
        let conj = |m: &CMatrix| m.map(|x| x.conj());
        let w = (conj(t1) * t1.transpose() + conj(t2) * t2.transpose()) * v;
        let normal = w - CMatrix::identity(self.len(), self.len()) * Complex64::new(0.5, 0.0);
        let anomalous = (t1 * t2.transpose() + t2 * t1.transpose()) * v;
        GaussianMoments { normal, anomalous }
    }
}
