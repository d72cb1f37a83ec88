//! Direct integration of the coupled kernel equations on a small collinear
//! frequency grid.
//!
//! With discrete modes `Ω_i = (i − (N−1)/2)ΔΩ`, `i = 0..N`, and the pump reduced
//! to its temporal profile, the kernels become matrices `K1` and
//! `L = K2·P` (`P` reverses the mode order) obeying
//! `dK1/dz̄ = g M conj(L)`, `dL/dz̄ = g M conj(K1)` with
//! `M_ij = ΔΩ/√(2π) α̃(Ω_i + Ω_j) e^{−iD̄(Ω_i; Ω_j) z̄}`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use super::sinc;
use crate::dispersion::{FourierMode, Mismatch, PumpSpec};
use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

pub const MAX_MODES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelOdeConfig {
    /// Number of modes, at most [`MAX_MODES`].
    pub modes: usize,
    pub d_omega: f64,
    pub steps: usize,
    /// Number of evenly spaced z̄ checkpoints for the unitarity check.
    pub checkpoints: usize,
}

impl KernelOdeConfig {
    /// 64 modes with five samples per 1/e half-width of the pump spectrum.
    pub fn for_pump(pump: &PumpSpec) -> Self {
        KernelOdeConfig {
            modes: 64,
            d_omega: 0.4 / pump.tau_fs,
            steps: 256,
            checkpoints: 8,
        }
    }
}

#[derive(Clone, Debug)]
pub struct KernelOdeResult {
    pub omegas: Vec<f64>,
    pub d_omega: f64,
    /// Dimensionless `K1·ΔΩ`.
    pub k1: CMatrix,
    /// Dimensionless `K2·ΔΩ·P`.
    pub l: CMatrix,
    /// Largest entry of `K1K1† − LL† − I` and of `K1Lᵀ − LK1ᵀ` over all
    /// checkpoints.
    pub unitarity_max: f64,
    pub symmetry_max: f64,
    /// Matrix `g ΔΩ/√(2π) α̃ e^{−iD̄/2} sinc(D̄/2)`, the first-order
    /// perturbative value of `L`.
    pub perturbative_l: CMatrix,
}

impl KernelOdeResult {
    /// Discrete coherence `G1(Ω_i, Ω_k) = Σ_j conj(L_ij) L_kj / ΔΩ`.
    pub fn coherence(&self) -> CMatrix {
        self.l.map(|v| v.conj()) * self.l.transpose() / Complex64::new(self.d_omega, 0.0)
    }

    /// Max `|L − L_pert|` relative to max `|L_pert|`.
    pub fn perturbative_error(&self) -> f64 {
        let peak = self.perturbative_l.iter().fold(0.0f64, |m, v| m.max(v.norm()));
        let diff = (&self.l - &self.perturbative_l)
            .iter()
            .fold(0.0f64, |m, v| m.max(v.norm()));
        diff / peak
    }
}

struct Coupling {
    c: CMatrix,
    d: DMatrix<f64>,
}

impl Coupling {
    fn at(&self, z: f64, g: f64) -> CMatrix {
        CMatrix::from_fn(self.c.nrows(), self.c.ncols(), |i, j| {
            self.c[(i, j)] * Complex64::from_polar(g, -self.d[(i, j)] * z)
        })
    }
}

fn rk4(coupling: &Coupling, g: f64, steps: usize, checkpoints: usize) -> (CMatrix, CMatrix, f64, f64) {
    let n = coupling.c.nrows();
    let mut k1 = CMatrix::identity(n, n);
    let mut l = CMatrix::zeros(n, n);
    let h = 1.0 / steps as f64;
    let hc = Complex64::new(h, 0.0);
    let conj = |m: &CMatrix| m.map(|v| v.conj());
    let every = (steps / checkpoints.max(1)).max(1);
    let (mut uni, mut sym) = (0.0f64, 0.0f64);
    for s in 0..steps {
        let z = s as f64 * h;
        let m0 = coupling.at(z, g);
        let mh = coupling.at(z + 0.5 * h, g);
        let m1 = coupling.at(z + h, g);
        let a1 = (&m0 * conj(&l), &m0 * conj(&k1));
        let (k1b, lb) = (&k1 + &a1.0 * (hc * 0.5), &l + &a1.1 * (hc * 0.5));
        let a2 = (&mh * conj(&lb), &mh * conj(&k1b));
        let (k1c, lc) = (&k1 + &a2.0 * (hc * 0.5), &l + &a2.1 * (hc * 0.5));
        let a3 = (&mh * conj(&lc), &mh * conj(&k1c));
        let (k1d, ld) = (&k1 + &a3.0 * hc, &l + &a3.1 * hc);
        let a4 = (&m1 * conj(&ld), &m1 * conj(&k1d));
        k1 += (a1.0 + (&a2.0 + &a3.0) * Complex64::new(2.0, 0.0) + a4.0) * (hc / 6.0);
        l += (a1.1 + (&a2.1 + &a3.1) * Complex64::new(2.0, 0.0) + a4.1) * (hc / 6.0);
        if (s + 1) % every == 0 || s + 1 == steps {
            let u = &k1 * k1.adjoint() - &l * l.adjoint() - CMatrix::identity(n, n);
            let a = &k1 * l.transpose() - &l * k1.transpose();
            uni = uni.max(u.iter().fold(0.0, |m, v| m.max(v.norm())));
            sym = sym.max(a.iter().fold(0.0, |m, v| m.max(v.norm())));
        }
    }
    (k1, l, uni, sym)
}

/// Integrates the kernel equations for `pump` (gain taken from it) and the
/// given dispersion. Errors with [`Error::StepTooLarge`] if doubling the
/// step count changes any kernel entry by more than `1e-6`.
pub fn integrate_kernel_equations(
    dispersion: &dyn Mismatch,
    pump: &PumpSpec,
    cfg: &KernelOdeConfig,
) -> Result<KernelOdeResult> {
    if cfg.modes > MAX_MODES || cfg.modes < 2 {
        return Err(Error::Domain(format!(
            "kernel grid needs 2..={MAX_MODES} modes, got {}",
            cfg.modes
        )));
    }
    if cfg.d_omega * pump.tau_fs > 1.0 {
        return Err(Error::GridTooCoarse(format!(
            "mode spacing {} rad/fs does not resolve the pump spectrum (need <= 1/tau_p)",
            cfg.d_omega
        )));
    }
    let n = cfg.modes;
    let half = 0.5 * (n - 1) as f64;
    let omegas: Vec<f64> = (0..n).map(|i| (i as f64 - half) * cfg.d_omega).collect();
    let entries: Vec<(f64, f64)> = (0..n * n)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let w = FourierMode::temporal(omegas[i]);
            let w0 = FourierMode::temporal(omegas[i] + omegas[j]);
            let c = cfg.d_omega / (2.0 * PI).sqrt() * pump.temporal_spectrum(omegas[i] + omegas[j]);
            Ok((c, dispersion.full(&w, &w0)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let coupling = Coupling {
        c: CMatrix::from_fn(n, n, |i, j| Complex64::new(entries[i * n + j].0, 0.0)),
        d: DMatrix::from_fn(n, n, |i, j| entries[i * n + j].1),
    };
    let g = pump.gain;
    let (k1, l, uni, sym) = rk4(&coupling, g, cfg.steps, cfg.checkpoints);
    let (k1f, lf, _, _) = rk4(&coupling, g, 2 * cfg.steps, 1);
    let change = (&k1 - &k1f)
        .iter()
        .chain((&l - &lf).iter())
        .fold(0.0f64, |m, v| m.max(v.norm()));
    if change > 1e-6 {
        return Err(Error::StepTooLarge { change });
    }
    let perturbative_l = CMatrix::from_fn(n, n, |i, j| {
        let d = coupling.d[(i, j)];
        coupling.c[(i, j)] * Complex64::from_polar(g * sinc(0.5 * d), -0.5 * d)
    });
    Ok(KernelOdeResult {
        omegas,
        d_omega: cfg.d_omega,
        k1: k1f,
        l: lf,
        unitarity_max: uni,
        symmetry_max: sym,
        perturbative_l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dispersion::{characteristic_scales, CrystalSpec, QuadraticDispersion};

    fn setup(g: f64, modes: usize) -> (QuadraticDispersion, PumpSpec, KernelOdeConfig) {
        let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(0.515).unwrap();
        let pump = PumpSpec::new(0.515, 300.0, 150.0, g).unwrap();
        let summary = characteristic_scales(&crystal, &pump).unwrap();
        let mut cfg = KernelOdeConfig::for_pump(&pump);
        cfg.modes = modes;
        cfg.steps = 128;
        (QuadraticDispersion { summary }, pump, cfg)
    }

    #[test]
    fn weak_gain_is_perturbative_and_unitary() {
        let (d, p, cfg) = setup(0.01, 16);
        let r = integrate_kernel_equations(&d, &p, &cfg).unwrap();
        assert!(r.perturbative_error() < 0.02);
        assert!(r.unitarity_max < 1e-10 && r.symmetry_max < 1e-10);
    }

    #[test]
    fn strong_gain_stays_unitary() {
        let (d, p, cfg) = setup(2.0, 24);
        let r = integrate_kernel_equations(&d, &p, &cfg).unwrap();
        assert!(r.unitarity_max < 1e-8, "{}", r.unitarity_max);
        let g1 = r.coherence();
        for i in 0..24 {
            for j in 0..24 {
                assert!((g1[(i, j)] - g1[(j, i)].conj()).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn rejects_bad_grids() {
        let (d, p, mut cfg) = setup(1.0, 16);
        cfg.modes = 65;
        assert!(integrate_kernel_equations(&d, &p, &cfg).is_err());
        cfg.modes = 16;
        cfg.d_omega = 2.0 / p.tau_fs;
        assert!(matches!(
            integrate_kernel_equations(&d, &p, &cfg),
            Err(Error::GridTooCoarse(_))
        ));
    }
}
