//! Uniform centred grids on reduced-dimensional space-time domains and the
//! continuous Fourier transform convention used throughout:
//!
//! `A(w) = ∫ dⁿξ/(2π)ⁿ e^{−i w·ξ} a(ξ)`, `a(ξ) = ∫ dⁿw e^{i w·ξ} A(w)`,
//! with `w·ξ = x q_x + y q_y − Ω t`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::dispersion::{FourierMode, PumpSpec, SpaceTimePoint};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisKind {
    X,
    Y,
    T,
}

impl AxisKind {
    /// Sign of this axis in `w·ξ`.
    pub fn sign(self) -> f64 {
        match self {
            AxisKind::X | AxisKind::Y => 1.0,
            AxisKind::T => -1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AxisKind::X => "x",
            AxisKind::Y => "y",
            AxisKind::T => "t",
        }
    }

    pub fn conjugate_name(self) -> &'static str {
        match self {
            AxisKind::X => "qx",
            AxisKind::Y => "qy",
            AxisKind::T => "omega",
        }
    }

    fn slot(self) -> usize {
        match self {
            AxisKind::X => 0,
            AxisKind::Y => 1,
            AxisKind::T => 2,
        }
    }
}

/// One centred axis: sample `i` sits at `(i − n/2)·step` in space-time and at
/// `(i − n/2)·2π/(n·step)` in the conjugate domain.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub kind: AxisKind,
    pub n: usize,
    pub step: f64,
}

impl Axis {
    pub fn new(kind: AxisKind, n: usize, step: f64) -> Result<Self> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::Domain(format!(
                "axis {} needs an even sample count >= 2, got {n}",
                kind.name()
            )));
        }
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::Domain(format!(
                "axis {} step must be positive, got {step}",
                kind.name()
            )));
        }
        Ok(Axis { kind, n, step })
    }

    /// Axis whose conjugate samples are spaced by `dw`.
    pub fn from_conjugate(kind: AxisKind, n: usize, dw: f64) -> Result<Self> {
        Axis::new(kind, n, 2.0 * PI / (n as f64 * dw))
    }

    pub fn coord(&self, i: usize) -> f64 {
        (i as f64 - (self.n / 2) as f64) * self.step
    }

    pub fn conjugate_step(&self) -> f64 {
        2.0 * PI / (self.n as f64 * self.step)
    }

    pub fn conjugate_coord(&self, i: usize) -> f64 {
        (i as f64 - (self.n / 2) as f64) * self.conjugate_step()
    }

    pub fn extent(&self) -> f64 {
        self.n as f64 * self.step
    }

    /// Axis with the roles of the two domains exchanged.
    pub fn conjugate(&self) -> Axis {
        Axis {
            kind: self.kind,
            n: self.n,
            step: self.conjugate_step(),
        }
    }
}

/// Which coordinates are kept by a reduced-dimensional model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dimensionality {
    /// `Ω` / `t` only.
    Temporal,
    /// `(q_x, Ω)` / `(x, t)`.
    SpatioTemporal,
    Full,
}

impl Dimensionality {
    pub fn kinds(self) -> &'static [AxisKind] {
        match self {
            Dimensionality::Temporal => &[AxisKind::T],
            Dimensionality::SpatioTemporal => &[AxisKind::X, AxisKind::T],
            Dimensionality::Full => &[AxisKind::X, AxisKind::Y, AxisKind::T],
        }
    }
}

/// Space-time sampling. Axes are kept in `x, y, t` order; data laid out
/// row-major with the last axis fastest.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub axes: Vec<Axis>,
}

impl GridSpec {
    pub fn new(mut axes: Vec<Axis>) -> Result<Self> {
        if axes.is_empty() || axes.len() > 3 {
            return Err(Error::Domain("a grid needs one to three axes".into()));
        }
        axes.sort_by_key(|a| a.kind.slot());
        if axes.windows(2).any(|w| w[0].kind == w[1].kind) {
            return Err(Error::Domain("repeated grid axis".into()));
        }
        Ok(GridSpec { axes })
    }

    pub fn temporal(n: usize, dt: f64) -> Result<Self> {
        GridSpec::new(vec![Axis::new(AxisKind::T, n, dt)?])
    }

    pub fn xt(nx: usize, dx: f64, nt: usize, dt: f64) -> Result<Self> {
        GridSpec::new(vec![Axis::new(AxisKind::X, nx, dx)?, Axis::new(AxisKind::T, nt, dt)?])
    }

    /// Grid resolving the pump with `samples_per_width` samples across each
    /// full 1/e width (`2τ_p`, `2w_p`) and spanning at least `widths` such
    /// widths. Sample counts are rounded up to a power of two.
    pub fn for_pump(pump: &PumpSpec, dims: Dimensionality, samples_per_width: f64, widths: f64) -> Result<Self> {
        let axes = dims
            .kinds()
            .iter()
            .map(|&kind| {
                let width = 2.0
                    * match kind {
                        AxisKind::T => pump.tau_fs,
                        _ => pump.waist_um,
                    };
                let step = width / samples_per_width;
                let n = ((widths * samples_per_width).ceil() as usize)
                    .max(2)
                    .next_power_of_two();
                Axis::new(kind, n, step)
            })
            .collect::<Result<Vec<_>>>()?;
        GridSpec::new(axes)
    }

    pub fn dimensionality(&self) -> Dimensionality {
        match self.axes.len() {
            1 => Dimensionality::Temporal,
            2 => Dimensionality::SpatioTemporal,
            _ => Dimensionality::Full,
        }
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.n).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn axis(&self, kind: AxisKind) -> Option<&Axis> {
        self.axes.iter().find(|a| a.kind == kind)
    }

    /// Space-time cell volume `Π Δξ`.
    pub fn cell(&self) -> f64 {
        self.axes.iter().map(|a| a.step).product()
    }

    /// Fourier cell volume `Π Δw`.
    pub fn conjugate_cell(&self) -> f64 {
        self.axes.iter().map(|a| a.conjugate_step()).product()
    }

    /// `(2π)^n` for the number of active axes.
    pub fn two_pi_power(&self) -> f64 {
        (2.0 * PI).powi(self.axes.len() as i32)
    }

    pub fn unravel(&self, mut flat: usize) -> [usize; 3] {
        let mut idx = [0usize; 3];
        for (k, a) in self.axes.iter().enumerate().rev() {
            idx[k] = flat % a.n;
            flat /= a.n;
        }
        idx
    }

    pub fn point(&self, flat: usize) -> SpaceTimePoint {
        let idx = self.unravel(flat);
        let mut c = [0.0; 3];
        for (k, a) in self.axes.iter().enumerate() {
            c[a.kind.slot()] = a.coord(idx[k]);
        }
        SpaceTimePoint::new(c[0], c[1], c[2])
    }

    pub fn mode(&self, flat: usize) -> FourierMode {
        let idx = self.unravel(flat);
        let mut c = [0.0; 3];
        for (k, a) in self.axes.iter().enumerate() {
            c[a.kind.slot()] = a.conjugate_coord(idx[k]);
        }
        FourierMode::new(c[0], c[1], c[2])
    }

    /// Flat index of the origin sample.
    pub fn origin(&self) -> usize {
        self.axes.iter().fold(0, |acc, a| acc * a.n + a.n / 2)
    }

    /// Errors unless every axis has at least `min_samples` samples across the
    /// pump's full 1/e width and spans at least two such widths.
    pub fn check_resolves(&self, pump: &PumpSpec, min_samples: f64) -> Result<()> {
        for a in &self.axes {
            let width = 2.0
                * match a.kind {
                    AxisKind::T => pump.tau_fs,
                    _ => pump.waist_um,
                };
            if width / a.step < min_samples {
                return Err(Error::GridTooCoarse(format!(
                    "axis {}: {:.2} samples per pump 1/e width, need {min_samples}",
                    a.kind.name(),
                    width / a.step
                )));
            }
            if a.extent() < 2.0 * width {
                return Err(Error::GridTooCoarse(format!(
                    "axis {}: extent {} does not cover two pump widths",
                    a.kind.name(),
                    a.extent()
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    SpaceTime,
    Fourier,
}

/// Complex samples on a [`GridSpec`] in either domain.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldGrid {
    pub spec: GridSpec,
    pub domain: Domain,
    pub data: Vec<Complex64>,
}

impl FieldGrid {
    pub fn from_spacetime_fn<F>(spec: &GridSpec, f: F) -> FieldGrid
    where
        F: Fn(&SpaceTimePoint) -> Complex64 + Sync,
    {
        let data = (0..spec.len()).into_par_iter().map(|i| f(&spec.point(i))).collect();
        FieldGrid {
            spec: spec.clone(),
            domain: Domain::SpaceTime,
            data,
        }
    }

    pub fn from_fourier_fn<F>(spec: &GridSpec, f: F) -> FieldGrid
    where
        F: Fn(&FourierMode) -> Complex64 + Sync,
    {
        let data = (0..spec.len()).into_par_iter().map(|i| f(&spec.mode(i))).collect();
        FieldGrid {
            spec: spec.clone(),
            domain: Domain::Fourier,
            data,
        }
    }

    /// Fallible variant of [`FieldGrid::from_fourier_fn`].
    pub fn try_from_fourier_fn<F>(spec: &GridSpec, f: F) -> Result<FieldGrid>
    where
        F: Fn(&FourierMode) -> Result<Complex64> + Sync,
    {
        let data = (0..spec.len())
            .into_par_iter()
            .map(|i| f(&spec.mode(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FieldGrid {
            spec: spec.clone(),
            domain: Domain::Fourier,
            data,
        })
    }

    /// Space-time point or Fourier mode coordinates of sample `flat`, in
    /// `x, y, t` (or `q_x, q_y, Ω`) slots.
    pub fn coords(&self, flat: usize) -> [f64; 3] {
        match self.domain {
            Domain::SpaceTime => {
                let p = self.spec.point(flat);
                [p.x, p.y, p.t]
            }
            Domain::Fourier => {
                let m = self.spec.mode(flat);
                [m.qx, m.qy, m.omega]
            }
        }
    }

    pub fn at_origin(&self) -> Complex64 {
        self.data[self.spec.origin()]
    }

    /// `∫ |f|²` with the measure of the current domain.
    pub fn norm_sq_integral(&self) -> f64 {
        let cell = match self.domain {
            Domain::SpaceTime => self.spec.cell(),
            Domain::Fourier => self.spec.conjugate_cell(),
        };
        pairwise_sum(&self.data.iter().map(|v| v.norm_sqr()).collect::<Vec<_>>()) * cell
    }

    /// `∫ f` with the measure of the current domain.
    pub fn integral(&self) -> Complex64 {
        let cell = match self.domain {
            Domain::SpaceTime => self.spec.cell(),
            Domain::Fourier => self.spec.conjugate_cell(),
        };
        let re = pairwise_sum(&self.data.iter().map(|v| v.re).collect::<Vec<_>>());
        let im = pairwise_sum(&self.data.iter().map(|v| v.im).collect::<Vec<_>>());
        Complex64::new(re, im) * cell
    }

    pub fn to_fourier(&self) -> FieldGrid {
        assert_eq!(self.domain, Domain::SpaceTime, "already in the Fourier domain");
        let mut out = self.clone();
        for k in 0..self.spec.axes.len() {
            let a = self.spec.axes[k];
            // e^{−i w·ξ}: forward DFT along x, y; inverse along t
            transform_axis(&mut out, k, a.kind.sign() > 0.0, a.step / (2.0 * PI));
        }
        out.domain = Domain::Fourier;
        out
    }

    pub fn to_spacetime(&self) -> FieldGrid {
        assert_eq!(self.domain, Domain::Fourier, "already in the space-time domain");
        let mut out = self.clone();
        for k in 0..self.spec.axes.len() {
            let a = self.spec.axes[k];
            transform_axis(&mut out, k, a.kind.sign() < 0.0, a.conjugate_step());
        }
        out.domain = Domain::SpaceTime;
        out
    }

    pub fn map<F: Fn(Complex64) -> Complex64 + Sync>(&self, f: F) -> FieldGrid {
        FieldGrid {
            spec: self.spec.clone(),
            domain: self.domain,
            data: self.data.par_iter().map(|&v| f(v)).collect(),
        }
    }

    /// Values along one axis through the origin.
    pub fn axis_cut(&self, kind: AxisKind) -> Option<(Vec<f64>, Vec<Complex64>)> {
        let k = self.spec.axes.iter().position(|a| a.kind == kind)?;
        let a = self.spec.axes[k];
        let stride: usize = self.spec.axes[k + 1..].iter().map(|a| a.n).product();
        let origin = self.spec.origin();
        let base = origin - (a.n / 2) * stride;
        let xs = (0..a.n)
            .map(|i| match self.domain {
                Domain::SpaceTime => a.coord(i),
                Domain::Fourier => a.conjugate_coord(i),
            })
            .collect();
        let vs = (0..a.n).map(|i| self.data[base + i * stride]).collect();
        Some((xs, vs))
    }
}

/// Centred DFT of every line along axis `k`: shift, transform, shift back,
/// then scale.
fn transform_axis(grid: &mut FieldGrid, k: usize, forward: bool, scale: f64) {
    let n = grid.spec.axes[k].n;
    let stride: usize = grid.spec.axes[k + 1..].iter().map(|a| a.n).product();
    let outer: usize = grid.spec.axes[..k].iter().map(|a| a.n).product();
    let mut planner = FftPlanner::new();
    let fft = if forward {
        planner.plan_fft_forward(n)
    } else {
        planner.plan_fft_inverse(n)
    };
    let starts: Vec<usize> = (0..outer)
        .flat_map(|o| (0..stride).map(move |s| o * n * stride + s))
        .collect();
    let data = &grid.data;
    let lines: Vec<Vec<Complex64>> = starts
        .par_iter()
        .map(|&st| {
            let mut line: Vec<Complex64> = (0..n).map(|i| data[st + i * stride]).collect();
            line.rotate_left(n / 2);
            fft.process(&mut line);
            line.rotate_left(n / 2);
            for v in &mut line {
                *v *= scale;
            }
            line
        })
        .collect();
    for (st, line) in starts.iter().zip(lines) {
        for (i, v) in line.into_iter().enumerate() {
            grid.data[st + i * stride] = v;
        }
    }
}

/// Order-independent pairwise summation.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 16 {
        return xs.iter().sum();
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}
