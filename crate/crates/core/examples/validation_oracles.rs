// Independent oracles for the quasi-stationary kernels: direct integration
// of the propagation equations, the 64-mode kernel ODE and the unitarity
// residual.

use twinbeam::dispersion::{CrystalSpec, FourierMode, PhaseMatching, PumpSpec, SpaceTimePoint};
use twinbeam::fourier::{Dimensionality, GridSpec};
use twinbeam::qs::QsModel;
use twinbeam::validation::{
    closed_form_f, integrate_f_equations, integrate_kernel_equations, unitarity_residual, KernelOdeConfig,
};

pub fn run_example() -> twinbeam::Result<(f64, f64, f64)> {
    let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(0.515)?;
    let pump = PumpSpec::new(0.515, 300.0, 150.0, 1.5)?;
    let model = QsModel::new(crystal.clone(), pump)?;

    let w = FourierMode::temporal(0.05);
    let xi = SpaceTimePoint::temporal(80.0);
    let (a1, a2) = integrate_f_equations(&model, &w, &xi, false, 256)?;
    let (b1, b2) = closed_form_f(&model, &w, &xi)?;
    let f_err = (a1 - b1).norm().max((a2 - b2).norm());
    println!("f-equations vs closed form: {f_err:.2e}");

    let weak = pump.with_gain(0.01);
    let pm = PhaseMatching::new(crystal, pump.wavelength_um);
    let r = integrate_kernel_equations(
        &pm,
        &weak,
        &KernelOdeConfig {
            steps: 64,
            ..KernelOdeConfig::for_pump(&weak)
        },
    )?;
    println!(
        "kernel ODE at g = 0.01: unitarity {:.1e}, first-order kernel gap {:.1e}",
        r.unitarity_max,
        r.perturbative_error()
    );

    let grid = GridSpec::for_pump(&pump, Dimensionality::Temporal, 16.0, 8.0)?;
    let u = unitarity_residual(&model, &FourierMode::ZERO, &grid)?;
    println!(
        "unitarity residual at tau_p = 300 fs: {:.2e} / {:.2e}",
        u.commutator, u.anti
    );
    Ok((f_err, r.perturbative_error(), u.commutator))
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
