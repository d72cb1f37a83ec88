//! Space-time envelopes `F_corr`, `F_coh` of the factorized moments.

use crate::dispersion::{PumpSpec, SpaceTimePoint};

/// `sinh(a)/sinh(b)` for `b > 0` without overflow.
pub fn sinh_ratio(a: f64, b: f64) -> f64 {
    debug_assert!(b > 0.0);
    let s = a.signum();
    let a = a.abs();
    s * (a - b).exp() * (-(-2.0 * a).exp_m1()) / (-(-2.0 * b).exp_m1())
}

/// `F_corr = cosh(gα) sinh(gα) / (cosh g sinh g) = sinh(2gα)/sinh(2g)`.
pub fn f_corr(g: f64, alpha: f64) -> f64 {
    if g == 0.0 {
        alpha
    } else {
        sinh_ratio(2.0 * g * alpha, 2.0 * g)
    }
}

/// `F_coh = sinh²(gα) / sinh²(g)`.
pub fn f_coh(g: f64, alpha: f64) -> f64 {
    if g == 0.0 {
        alpha * alpha
    } else {
        sinh_ratio(g * alpha, g).powi(2)
    }
}

/// `(F_corr, F_coh)` of a Gaussian pump at `ξ`.
pub fn envelopes(pump: &PumpSpec, xi: &SpaceTimePoint) -> (f64, f64) {
    let a = pump.amplitude(xi);
    (f_corr(pump.gain, a), f_coh(pump.gain, a))
}
