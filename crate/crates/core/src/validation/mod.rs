//! Independent numerical oracles for the approximations of the
//! quasi-stationary model.

pub mod ansatz2;
pub mod factorization;
pub mod fequations;
pub mod kernel_ode;
pub mod unitarity;

use serde::{Deserialize, Serialize};

pub use ansatz2::{ansatz2_error_map, ansatz2_locus_error, LocusError};
pub use factorization::{factorization_error, factorization_error_map};
pub use fequations::{closed_form_f, integrate_f_equations, rk4_f_equations};
pub use kernel_ode::{integrate_kernel_equations, KernelOdeConfig, KernelOdeResult};
pub use unitarity::{commutators, unitarity_residual, UnitarityReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapAxis {
    Omega,
    Omega0,
    Q,
    Q0,
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapNorm {
    Abs,
    RelToPeak,
}

/// Real values on a rectangular grid; `values[iy * x.len() + ix]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorMap {
    pub axes: (MapAxis, MapAxis),
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub values: Vec<f64>,
    pub norm: MapNorm,
}

impl ErrorMap {
    pub fn get(&self, ix: usize, iy: usize) -> f64 {
        self.values[iy * self.x.len() + ix]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest `|value|` over samples whose coordinates satisfy `keep`.
    pub fn max_abs_where(&self, keep: impl Fn(f64, f64) -> bool) -> f64 {
        let mut m: f64 = 0.0;
        for (iy, &y) in self.y.iter().enumerate() {
            for (ix, &x) in self.x.iter().enumerate() {
                if keep(x, y) {
                    m = m.max(self.get(ix, iy).abs());
                }
            }
        }
        m
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}

/// `sin(x)/x`.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

pub(crate) fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![0.5 * (a + b)];
    }
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}
