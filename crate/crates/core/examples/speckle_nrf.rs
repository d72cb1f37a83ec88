// Stochastic speckle: Wigner sampling of the discretised transformation,
// ensemble photon spectrum and the noise reduction factor of matched pixels.

use twinbeam::dispersion::{CrystalSpec, FourierMode, PumpSpec};
use twinbeam::fourier::GridSpec;
use twinbeam::qs::QsModel;
use twinbeam::speckle::{two_mode_squeezer, PixelPair, SpeckleConfig, SpeckleSampler};

pub fn run_example() -> twinbeam::Result<(f64, f64)> {
    let st = two_mode_squeezer(1.0, 20_000, 5);
    println!(
        "two-mode squeezer g = 1: <n> {:.3} (sinh^2 {:.3})",
        st.mean_signal,
        1f64.sinh().powi(2)
    );

    let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(0.515)?;
    let pump = PumpSpec::new(0.515, 200.0, 150.0, 2.0)?;
    let model = QsModel::new(crystal, pump)?;
    let grid = GridSpec::temporal(64, 8.0 * pump.tau_fs / 64.0)?;
    let sampler = SpeckleSampler::new(&model, &grid)?;
    let pair = PixelPair::matched(&grid, &FourierMode::temporal(6.0 * grid.conjugate_cell()), 4)?;
    let cfg = SpeckleConfig {
        shots: 4000,
        seed: 11,
        ..Default::default()
    };
    let ens = sampler.run(&cfg, &[pair.signal.clone(), pair.idler.clone()])?;
    let nrf = ens.noise_reduction_factor(0, 1);
    let exact = sampler.exact_moments().noise_reduction_factor(&pair);
    println!(
        "{} shots: <N_s> {:.2}, NRF {:.4} +/- {:.4} (exact Gaussian moments {:.4})",
        ens.shots, nrf.mean_signal, nrf.nrf, nrf.sigma, exact
    );
    Ok((nrf.nrf, exact))
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
