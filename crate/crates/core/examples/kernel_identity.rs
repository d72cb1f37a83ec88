// Closed-form Bogoliubov kernels: the identity |F1|² − |F2|² = 1 on and off
// phase matching, and the kernels of a real crystal at a few modes.

use twinbeam::dispersion::{CrystalSpec, FourierMode, PumpSpec, SpaceTimePoint};
use twinbeam::qs::{kernel_parts, QsModel};

pub fn run_example() -> twinbeam::Result<f64> {
    let mut worst: f64 = 0.0;
    for d_bar in [-12.0, -4.0, 0.0, 1.5, 4.0, 30.0] {
        for g_alpha in [0.0, 0.5, 2.0, 5.0] {
            let (f1, f2, gamma_sq) = kernel_parts(d_bar, g_alpha);
            let r = (f1.norm_sqr() - f2.norm_sqr() - 1.0).abs();
            worst = worst.max(r);
            if d_bar == 0.0 {
                println!(
                    "D=0, g*alpha={g_alpha}: |F2| = {:.6} (sinh {:.6}), Gamma^2 {gamma_sq}",
                    f2.norm(),
                    g_alpha.sinh()
                );
            }
        }
    }
    let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(0.515)?;
    let model = QsModel::new(crystal, PumpSpec::new(0.515, 150.0, 150.0, 2.0)?)?;
    for om in [0.0, 0.1, 0.2] {
        let k = model.kernel_eval(&FourierMode::temporal(om), &SpaceTimePoint::ORIGIN)?;
        let r = (k.f1.norm_sqr() - k.f2.norm_sqr() - 1.0).abs();
        worst = worst.max(r / k.f1.norm_sqr());
        println!(
            "Omega {om}: D_bar {:.3}, |F2|^2 {:.4}",
            model.d_bar(&FourierMode::temporal(om))?,
            k.f2.norm_sqr()
        );
    }
    println!("largest identity residual {worst:.2e}");
    Ok(worst)
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
