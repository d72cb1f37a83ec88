// Correlation and coherence peaks μ_corr, μ_coh: rms widths against the
// Gaussian-pump laws, and the space-time narrowing of the envelopes.

use twinbeam::analytics::{mu_rms_width, narrowing_factors, numeric_narrowing, width_sigmas};
use twinbeam::dispersion::{CrystalSpec, PumpSpec};
use twinbeam::fourier::{AxisKind, Dimensionality, GridSpec};
use twinbeam::qs::{PeakKind, QsModel};

pub fn run_example() -> twinbeam::Result<f64> {
    let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(0.515)?;
    let pump = PumpSpec::new(0.515, 150.0, 150.0, 1.0)?;
    let grid = GridSpec::for_pump(&pump, Dimensionality::Temporal, 32.0, 8.0)?;
    let mut worst: f64 = 0.0;
    for g in [0.5, 2.0, 4.0] {
        let model = QsModel::new(crystal.clone(), pump.with_gain(g))?;
        let sig = width_sigmas(g, &pump)?;
        let coh = mu_rms_width(&model, PeakKind::Coh, AxisKind::T, &grid)?;
        let corr = mu_rms_width(&model, PeakKind::Corr, AxisKind::T, &grid)?;
        worst = worst
            .max((coh / sig.coh_omega - 1.0).abs())
            .max((corr / sig.corr_omega - 1.0).abs());
        let (n_corr, n_coh) = narrowing_factors(g)?;
        let (m_corr, m_coh) = numeric_narrowing(g)?;
        println!(
            "g {g}: sigma_coh {coh:.5} (law {:.5}), sigma_corr {corr:.5} (law {:.5}); narrowing corr {m_corr:.3}/{n_corr:.3}, coh {m_coh:.3}/{n_coh:.3}",
            sig.coh_omega, sig.corr_omega
        );
    }
    Ok(worst)
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
