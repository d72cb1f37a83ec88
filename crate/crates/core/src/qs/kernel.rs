//! Closed-form quasi-stationary Bogoliubov kernels.

use num_complex::Complex64;

use crate::special::{cosh_sqrt, sinhc_sqrt};

/// Kernel values at one `(w, ξ)`. `gamma_sq` is `Γ² = |gα_p|² − D̄²/4`,
/// which is real for a real pump envelope.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelValue {
    pub f1: Complex64,
    pub f2: Complex64,
    pub gamma_sq: f64,
    pub phi: f64,
}

/// `F1 = C(Γ²) + i (D̄/2) S(Γ²)`, `F2 = gα S(Γ²)` with `C(z) = cosh √z` and
/// `S(z) = sinh √z / √z`.
pub fn kernel_parts(d_bar: f64, g_alpha: f64) -> (Complex64, Complex64, f64) {
    let gamma_sq = g_alpha * g_alpha - 0.25 * d_bar * d_bar;
    let s = sinhc_sqrt(gamma_sq);
    (
        Complex64::new(cosh_sqrt(gamma_sq), 0.5 * d_bar * s),
        Complex64::new(g_alpha * s, 0.0),
        gamma_sq,
    )
}
