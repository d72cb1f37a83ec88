// Characteristic scales of BBO for the two built-in pump configurations.

use twinbeam::dispersion::{characteristic_scales, CrystalSpec, PumpSpec};

pub fn run_example() -> twinbeam::Result<Vec<(f64, f64, f64)>> {
    let mut rows = Vec::new();
    for (lambda_p, tau) in [(0.515, 150.0), (0.352, 849.3)] {
        let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(lambda_p)?;
        let pump = PumpSpec::new(lambda_p, tau, 150.0, 1.0)?;
        let s = characteristic_scales(&crystal, &pump)?;
        println!(
            "pump {:.0} nm: cut {:.3} deg, Omega_GVD {:.4} rad/fs, q_diff {:.2} 1/mm, GVM {:.1} fs/mm, walk-off {:.1} um/mm",
            lambda_p * 1000.0,
            crystal.cut_angle_rad.to_degrees(),
            s.omega_gvd,
            s.q_diff * 1000.0,
            s.gvm_fs_per_mm(),
            s.walkoff_um_per_mm()
        );
        rows.push((s.omega_gvd, s.q_diff * 1000.0, s.gvm_fs_per_mm()));
    }
    Ok(rows)
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
