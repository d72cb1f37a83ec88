//! RK4 integration of the two coupled f-equations, with the pump drifting
//! along the walk-off vector `ξ_wo = (−l_woff, 0, τ_GVM)`.

use num_complex::Complex64;

use crate::dispersion::{FourierMode, SpaceTimePoint};
use crate::error::{Error, Result};
use crate::qs::{kernel_parts, QsModel};

/// Classic RK4 in `z̄ = z/l_c` of
/// `f1′ = g α(z̄) f̃2 e^{−iD̄z̄}`, `f̃2′ = g α(z̄) f1 e^{iD̄z̄}` from
/// `f1 = 1, f̃2 = 0`, with `f̃2 = f2*(−w)`. Returns `(f1, f2)` at the exit
/// face.
pub fn rk4_f_equations(d_bar: f64, g: f64, alpha: &dyn Fn(f64) -> f64, steps: usize) -> (Complex64, Complex64) {
    let rhs = |z: f64, f1: Complex64, f2c: Complex64| {
        let a = g * alpha(z);
        let e = Complex64::from_polar(1.0, d_bar * z);
        (a * f2c * e.conj(), a * f1 * e)
    };
    let h = 1.0 / steps as f64;
    let (mut f1, mut f2c) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    for n in 0..steps {
        let z = n as f64 * h;
        let k1 = rhs(z, f1, f2c);
        let k2 = rhs(z + 0.5 * h, f1 + 0.5 * h * k1.0, f2c + 0.5 * h * k1.1);
        let k3 = rhs(z + 0.5 * h, f1 + 0.5 * h * k2.0, f2c + 0.5 * h * k2.1);
        let k4 = rhs(z + h, f1 + h * k3.0, f2c + h * k3.1);
        f1 += h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
        f2c += h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1);
    }
    (f1, f2c.conj())
}

/// `e^{−iD̄/2} (F1, F2)` at the exit face.
pub fn closed_form_f(model: &QsModel, w: &FourierMode, xi: &SpaceTimePoint) -> Result<(Complex64, Complex64)> {
    let d = model.d_bar(w)?;
    let (f1, f2, _) = kernel_parts(d, model.gain() * model.pump.amplitude(xi));
    let ph = Complex64::from_polar(1.0, -0.5 * d);
    Ok((ph * f1, ph * f2))
}

/// Integrates the f-equations at `(w, ξ)`; with `walkoff` the pump is
/// evaluated at `ξ + ξ_wo z̄`. The result at `steps` is compared with the one
/// at `2·steps`; a change above `1e-6` is reported as
/// [`Error::StepTooLarge`]. Returns the finer result.
pub fn integrate_f_equations(
    model: &QsModel,
    w: &FourierMode,
    xi: &SpaceTimePoint,
    walkoff: bool,
    steps: usize,
) -> Result<(Complex64, Complex64)> {
    if steps < 64 {
        return Err(Error::Domain(format!("need at least 64 steps, got {steps}")));
    }
    let d = model.d_bar(w)?;
    let s = &model.summary;
    let drift = if walkoff {
        SpaceTimePoint::new(-s.l_woff, 0.0, s.tau_gvm)
    } else {
        SpaceTimePoint::ORIGIN
    };
    let alpha = |z: f64| {
        let p = SpaceTimePoint::new(xi.x + drift.x * z, xi.y + drift.y * z, xi.t + drift.t * z);
        model.pump.amplitude(&p)
    };
    let coarse = rk4_f_equations(d, model.gain(), &alpha, steps);
    let fine = rk4_f_equations(d, model.gain(), &alpha, 2 * steps);
    let change = (coarse.0 - fine.0).norm().max((coarse.1 - fine.1).norm());
    if change > 1e-6 {
        return Err(Error::StepTooLarge { change });
    }
    Ok(fine)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dispersion::{CrystalSpec, PumpSpec};

    fn model(g: f64) -> QsModel {
        let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(0.515).unwrap();
        QsModel::new(crystal, PumpSpec::new(0.515, 150.0, 150.0, g).unwrap()).unwrap()
    }

    #[test]
    fn constant_pump_matches_closed_form() {
        let m = model(1.5);
        for (om, t) in [(0.0, 0.0), (0.08, 40.0), (-0.15, -120.0), (0.3, 10.0)] {
            let w = FourierMode::temporal(om);
            let xi = SpaceTimePoint::temporal(t);
            let (a1, a2) = integrate_f_equations(&m, &w, &xi, false, 128).unwrap();
            let (b1, b2) = closed_form_f(&m, &w, &xi).unwrap();
            assert!((a1 - b1).norm() < 1e-9 && (a2 - b2).norm() < 1e-9, "{om} {t}");
        }
    }

    #[test]
    fn fourth_order_convergence() {
        let alpha = |_z: f64| 1.0;
        let exact = {
            let (f1, f2, _) = kernel_parts(3.0, 2.0);
            let ph = Complex64::from_polar(1.0, -1.5);
            (ph * f1, ph * f2)
        };
        let err = |n| {
            let r = rk4_f_equations(3.0, 2.0, &alpha, n);
            (r.0 - exact.0).norm().max((r.1 - exact.1).norm())
        };
        let ratio = err(8) / err(16);
        assert!((12.0..=20.0).contains(&ratio), "{ratio}");
    }

    #[test]
    fn phase_matched_gain_is_sinh() {
        let (f1, f2) = rk4_f_equations(0.0, 2.0, &|_z: f64| 1.0, 256);
        assert!((f2.norm() - 2f64.sinh()).abs() < 1e-8);
        assert!((f1.norm() - 2f64.cosh()).abs() < 1e-8);
    }

    #[test]
    fn too_few_steps_rejected() {
        let m = model(1.0);
        assert!(integrate_f_equations(&m, &FourierMode::ZERO, &SpaceTimePoint::ORIGIN, false, 8).is_err());
    }

    #[test]
    fn walkoff_reduces_gain_off_peak() {
        let m = model(2.0);
        let w = FourierMode::ZERO;
        let xi = SpaceTimePoint::ORIGIN;
        let (_, a) = integrate_f_equations(&m, &w, &xi, false, 256).unwrap();
        let (_, b) = integrate_f_equations(&m, &w, &xi, true, 256).unwrap();
        assert!(b.norm() < a.norm());
    }
}
