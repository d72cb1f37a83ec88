//! Quasi-stationary kernels, correlation and coherence functions.

pub mod envelopes;
pub mod kernel;
pub mod model;

pub use envelopes::{envelopes, f_coh, f_corr};
pub use kernel::{kernel_parts, KernelValue};
pub use model::{ft_point, IntensityTerms, MismatchModel, PeakKind, PhaseConvention, QsModel};
