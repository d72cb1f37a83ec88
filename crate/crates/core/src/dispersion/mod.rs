//! Uniaxial-crystal optics: indices, wavenumbers, phase mismatch and the
//! characteristic scales derived from them.

pub mod crystal;
pub mod modes;
pub mod phase_matching;
pub mod pump;
pub mod scales;
pub mod sellmeier;

pub use crystal::{omega_to_wavelength, wavelength_to_omega, CrystalSpec, KJet, Polarization};
pub use modes::{FourierMode, SpaceTimePoint};
pub use phase_matching::{kz, mismatch_taylor, KzModel, Mismatch, PhaseMatching, QuadraticDispersion};
pub use pump::PumpSpec;
pub use scales::{characteristic_scales, PhaseMatchSummary};
pub use sellmeier::SellmeierSet;
