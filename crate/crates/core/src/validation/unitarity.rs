//! Discretised commutators of the quasi-stationary input-output relation.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dispersion::FourierMode;
use crate::error::Result;
use crate::fourier::{FieldGrid, GridSpec};
use crate::qs::{ft_point, kernel_parts, QsModel};

/// `([A(w), A†(w′)], [A(w), A(w′)])` without the phase prefactors,
/// integrated over the ξ grid.
pub fn commutators(
    model: &QsModel,
    w: &FourierMode,
    w2: &FourierMode,
    grid: &GridSpec,
) -> Result<(Complex64, Complex64)> {
    let (d1, d2) = (model.d_bar(w)?, model.d_bar(w2)?);
    let g = model.gain();
    let a = FieldGrid::from_spacetime_fn(grid, |xi| {
        let ga = g * model.pump.amplitude(xi);
        let (f11, f21, _) = kernel_parts(d1, ga);
        let (f12, f22, _) = kernel_parts(d2, ga);
        f11 * f12.conj() - f21 * f22.conj()
    });
    let b = FieldGrid::from_spacetime_fn(grid, |xi| {
        let ga = g * model.pump.amplitude(xi);
        let (f11, f21, _) = kernel_parts(d1, ga);
        let (f12, f22, _) = kernel_parts(d2, ga);
        f11 * f22 - f21 * f12
    });
    Ok((ft_point(&a, &(*w - *w2)), ft_point(&b, &(*w + *w2))))
}

/// Residuals of both commutators around `w`, summed over `w′` on the
/// conjugate grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitarityReport {
    /// `Σ |[A(w),A†(w+w0)] − δ| Δw`, relative to the unit delta mass.
    pub commutator: f64,
    /// `Σ |[A(w),A(−w+w0)]| Δw` relative to `Σ |∫F1(w)F2(w′)| Δw`.
    pub anti: f64,
}

pub fn unitarity_residual(model: &QsModel, w: &FourierMode, grid: &GridSpec) -> Result<UnitarityReport> {
    grid.check_resolves(&model.pump, crate::qs::model::MIN_SAMPLES_PER_WIDTH)?;
    let dw = grid.conjugate_cell();
    let origin = grid.origin();
    let rows = (0..grid.len())
        .into_par_iter()
        .map(|k| {
            let w0 = grid.mode(k);
            let (c1, _) = commutators(model, w, &(*w + w0), grid)?;
            let w2 = w0 - *w;
            let (_, c2) = commutators(model, w, &w2, grid)?;
            let d2 = model.d_bar(&w2)?;
            let d1 = model.d_bar(w)?;
            let g = model.gain();
            let t = FieldGrid::from_spacetime_fn(grid, |xi| {
                let ga = g * model.pump.amplitude(xi);
                kernel_parts(d1, ga).0 * kernel_parts(d2, ga).1
            });
            let first = ft_point(&t, &(*w + w2)).norm();
            let delta = if k == origin { 1.0 / dw } else { 0.0 };
            Ok(((c1 - delta).norm(), c2.norm(), first))
        })
        .collect::<Result<Vec<_>>>()?;
    let sum =
        |f: fn(&(f64, f64, f64)) -> f64| crate::fourier::pairwise_sum(&rows.iter().map(f).collect::<Vec<_>>()) * dw;
    Ok(UnitarityReport {
        commutator: sum(|r| r.0),
        anti: sum(|r| r.1) / sum(|r| r.2),
    })
}
