//! Error of replacing the kernels by their factorized envelopes.

use num_complex::Complex64;
use rayon::prelude::*;

use super::{linspace, ErrorMap, MapAxis, MapNorm};
use crate::dispersion::{FourierMode, SpaceTimePoint};
use crate::error::Result;
use crate::qs::{f_coh, f_corr, kernel_parts, QsModel};

/// Unscaled errors
/// `F1(w,ξ)F2(−w,ξ) − F_corr(ξ)F1(w,0)F2(−w,0)` and
/// `F2(w,ξ)² − F_coh(ξ)F2(w,0)²` for conjugate mismatches `d`, `dm`.
pub fn factorization_error(d: f64, dm: f64, g: f64, alpha: f64) -> (Complex64, f64) {
    let (f1, _, _) = kernel_parts(d, g * alpha);
    let (_, f2m, _) = kernel_parts(dm, g * alpha);
    let (f10, _, _) = kernel_parts(d, g);
    let (_, f2m0, _) = kernel_parts(dm, g);
    let (_, f2, _) = kernel_parts(d, g * alpha);
    let (_, f20, _) = kernel_parts(d, g);
    (
        f1 * f2m - f_corr(g, alpha) * f10 * f2m0,
        f2.norm_sqr() - f_coh(g, alpha) * f20.norm_sqr(),
    )
}

/// Maps over `(Ω, t)` at `q = 0`, `x = y = 0`, each scaled to the peak of the
/// corresponding exact quantity on the map. Returns `(corr, coh)`.
pub fn factorization_error_map(
    model: &QsModel,
    omega_max: f64,
    t_max: f64,
    n: (usize, usize),
) -> Result<(ErrorMap, ErrorMap)> {
    let x = linspace(-omega_max, omega_max, n.0);
    let y = linspace(-t_max, t_max, n.1);
    let g = model.gain();
    let d: Vec<(f64, f64)> = x
        .par_iter()
        .map(|&om| {
            let w = FourierMode::temporal(om);
            Ok((model.d_bar(&w)?, model.d_bar(&-w)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let cells: Vec<(f64, f64, f64, f64)> = (0..x.len() * y.len())
        .into_par_iter()
        .map(|k| {
            let (iy, ix) = (k / x.len(), k % x.len());
            let a = model.pump.amplitude(&SpaceTimePoint::temporal(y[iy]));
            let (dc, dh) = factorization_error(d[ix].0, d[ix].1, g, a);
            let exact_c = (kernel_parts(d[ix].0, g * a).0 * kernel_parts(d[ix].1, g * a).1).norm();
            let exact_h = kernel_parts(d[ix].0, g * a).1.norm_sqr();
            (dc.norm() * dc.re.signum(), dh, exact_c, exact_h)
        })
        .collect();
    let peak_c = cells.iter().fold(0.0f64, |m, c| m.max(c.2));
    let peak_h = cells.iter().fold(0.0f64, |m, c| m.max(c.3));
    let scale = |p: f64| if p > 0.0 { 1.0 / p } else { 0.0 };
    let (sc, sh) = (scale(peak_c), scale(peak_h));
    let mk = |values: Vec<f64>| ErrorMap {
        axes: (MapAxis::Omega, MapAxis::T),
        x: x.clone(),
        y: y.clone(),
        values,
        norm: MapNorm::RelToPeak,
    };
    Ok((
        mk(cells.iter().map(|c| c.0 * sc).collect()),
        mk(cells.iter().map(|c| c.1 * sh).collect()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dispersion::{CrystalSpec, PumpSpec};

    #[test]
    fn exact_at_peak_and_phase_matching() {
        for g in [0.5, 1.8, 3.0] {
            for d in [-3.0, 0.7, 5.0] {
                let (c, h) = factorization_error(d, d, g, 1.0);
                assert!(c.norm() < 1e-12 && h.abs() < 1e-12);
            }
            for a in [0.1, 0.5, 0.9] {
                let (c, h) = factorization_error(0.0, 0.0, g, a);
                assert!(c.norm() < 1e-12 && h.abs() < 1e-12, "{g} {a}");
            }
        }
    }

    #[test]
    fn map_is_finite_and_small_near_centre() {
        let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(0.515).unwrap();
        let m = QsModel::new(crystal, PumpSpec::new(0.515, 150.0, 150.0, 1.8).unwrap()).unwrap();
        let (c, h) = factorization_error_map(&m, 0.1, 150.0, (21, 21)).unwrap();
        assert!(c.is_finite() && h.is_finite());
        assert!(c.get(10, 10).abs() < 1e-12 && h.get(10, 10).abs() < 1e-12);
        assert!(c.max_abs() < 0.1 && h.max_abs() < 0.1);
    }
}
