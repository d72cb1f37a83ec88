//! Error of the linearised pump-mode dependence of the phase mismatch.

use rayon::prelude::*;

use super::{linspace, sinc, ErrorMap, MapAxis, MapNorm};
use crate::dispersion::{FourierMode, Mismatch, PhaseMatchSummary};
use crate::error::{Error, Result};

/// `D̄(w; −w) − τ_GVM Ω0 − l_woff q0x`.
pub fn approximate_mismatch(
    dispersion: &dyn Mismatch,
    summary: &PhaseMatchSummary,
    w: &FourierMode,
    w0: &FourierMode,
) -> Result<f64> {
    Ok(dispersion.conjugate(w)? - summary.tau_gvm * w0.omega - summary.l_woff * w0.qx)
}

/// `sinc(D̄_appr/2) − sinc(D̄/2)` at one `(w, w0)`.
pub fn ansatz2_error(
    dispersion: &dyn Mismatch,
    summary: &PhaseMatchSummary,
    w: &FourierMode,
    w0: &FourierMode,
) -> Result<f64> {
    let full = dispersion.full(w, w0)?;
    let appr = approximate_mismatch(dispersion, summary, w, w0)?;
    Ok(sinc(0.5 * appr) - sinc(0.5 * full))
}

/// Error map over `(Ω, Ω0)` at `q = q0 = 0`.
pub fn ansatz2_error_map(
    dispersion: &dyn Mismatch,
    summary: &PhaseMatchSummary,
    omega_max: f64,
    omega0_max: f64,
    n: (usize, usize),
) -> Result<ErrorMap> {
    let x = linspace(-omega_max, omega_max, n.0);
    let y = linspace(-omega0_max, omega0_max, n.1);
    let values = (0..x.len() * y.len())
        .into_par_iter()
        .map(|k| {
            let (iy, ix) = (k / x.len(), k % x.len());
            ansatz2_error(
                dispersion,
                summary,
                &FourierMode::temporal(x[ix]),
                &FourierMode::temporal(y[iy]),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ErrorMap {
        axes: (MapAxis::Omega, MapAxis::Omega0),
        x,
        y,
        values,
        norm: MapNorm::Abs,
    })
}

/// Error along the plane-wave matching locus.
#[derive(Clone, Debug, PartialEq)]
pub struct LocusError {
    pub omega: Vec<f64>,
    /// Matching transverse wavenumber along x at each Ω.
    pub q: Vec<f64>,
    /// Worst error over the sign choices of `(q, Ω0, q0x)` at each Ω.
    pub error: Vec<f64>,
}

impl LocusError {
    pub fn max_abs_within(&self, omega_max: f64) -> f64 {
        self.omega
            .iter()
            .zip(&self.error)
            .filter(|(o, _)| o.abs() <= omega_max)
            .fold(0.0, |m, (_, e)| m.max(e.abs()))
    }
}

/// Root of `D̄(q, 0, Ω) = 0` in `q ≥ 0` by bisection.
fn locus_q(dispersion: &dyn Mismatch, summary: &PhaseMatchSummary, omega: f64) -> Result<f64> {
    let f = |q: f64| dispersion.conjugate(&FourierMode::new(q, 0.0, omega));
    let f0 = f(0.0)?;
    if f0 <= 0.0 {
        return Ok(0.0);
    }
    let mut hi = summary.q_diff;
    while f(hi)? > 0.0 {
        hi *= 2.0;
        if hi > 100.0 * summary.q_diff {
            return Err(Error::RootFind(format!("no matching q at omega = {omega}")));
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let m = 0.5 * (lo + hi);
        if f(m)? > 0.0 {
            lo = m;
        } else {
            hi = m;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Error on the matching locus `D(w) = 0` with the pump mode at its 1/e
/// point, `Ω0 = ±2/τ_p`, `q0x = ±2/w_p`.
pub fn ansatz2_locus_error(
    dispersion: &dyn Mismatch,
    summary: &PhaseMatchSummary,
    tau_p: f64,
    w_p: f64,
    omega_max: f64,
    n: usize,
) -> Result<LocusError> {
    let omega = linspace(0.0, omega_max, n);
    let rows = omega
        .par_iter()
        .map(|&om| {
            let q = locus_q(dispersion, summary, om)?;
            let mut worst: f64 = 0.0;
            for sq in [1.0, -1.0] {
                for so in [1.0, -1.0] {
                    for sp in [1.0, -1.0] {
                        let w = FourierMode::new(sq * q, 0.0, om);
                        let w0 = FourierMode::new(sp * 2.0 / w_p, 0.0, so * 2.0 / tau_p);
                        let e = ansatz2_error(dispersion, summary, &w, &w0)?;
                        if e.abs() > worst.abs() {
                            worst = e;
                        }
                    }
                }
            }
            Ok((q, worst))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LocusError {
        omega,
        q: rows.iter().map(|r| r.0).collect(),
        error: rows.iter().map(|r| r.1).collect(),
    })
}
