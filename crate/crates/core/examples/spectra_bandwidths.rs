// Central-band widths of the photon-number and pair-amplitude spectra
// against the analytic gain laws.

use twinbeam::analytics::{central_band_law, numeric_band_hwhm, Quantity, WidthAxis};
use twinbeam::dispersion::{CrystalSpec, PumpSpec};
use twinbeam::qs::QsModel;

pub fn run_example() -> twinbeam::Result<f64> {
    let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(0.515)?;
    let base = QsModel::new(crystal, PumpSpec::new(0.515, 150.0, 150.0, 1.0)?)?;
    let mut worst: f64 = 0.0;
    println!("   g  quantity     axis   law     numeric");
    for g in [0.5, 1.0, 2.0, 4.0] {
        let model = base.clone().with_gain(g);
        for q in [Quantity::SpectrumG1, Quantity::SpectrumPsi] {
            for axis in [WidthAxis::Omega, WidthAxis::Q] {
                let law = central_band_law(q, g)?;
                let num = numeric_band_hwhm(&model, q, axis, 401, 3.0)?;
                worst = worst.max((num / law - 1.0).abs());
                println!(
                    "{g:4}  {:<11}  {:<5}  {law:.4}  {num:.4}",
                    format!("{q:?}"),
                    format!("{axis:?}")
                );
            }
        }
    }
    println!("largest relative gap {worst:.4}");
    Ok(worst)
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
