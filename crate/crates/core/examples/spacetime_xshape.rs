// X-shaped space-time biphoton correlation: the peak stays on the time
// axis at x = 0 and spreads along the arms t ∝ x² away from it.

use twinbeam::dispersion::{CrystalSpec, PumpSpec};
use twinbeam::fourier::{AxisKind, GridSpec};
use twinbeam::qs::QsModel;

pub fn run_example() -> twinbeam::Result<(f64, f64)> {
    let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(0.515)?;
    let model = QsModel::new(crystal, PumpSpec::new(0.515, 150.0, 150.0, 1.0)?)?;
    let s = &model.summary;
    let (nx, nt) = (64usize, 128usize);
    let two_pi = 2.0 * std::f64::consts::PI;
    let grid = GridSpec::xt(nx, two_pi / (8.0 * s.q_diff), nt, two_pi / (8.0 * s.omega_gvd))?;
    let (psi, _g1) = model.spacetime_peaks(&grid)?;
    let (ts, cut) = psi.axis_cut(AxisKind::T).expect("t axis");
    let peak = cut.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let xa = grid.axis(AxisKind::X).expect("x axis");
    // Row at x = extent/4: where along t does |Ψ| peak?
    let ix = nx / 2 + nx / 8;
    let row: Vec<f64> = (0..nt).map(|it| psi.data[ix * nt + it].norm()).collect();
    let imax = (0..nt).max_by(|&a, &b| row[a].total_cmp(&row[b])).expect("row");
    println!("|Psi| peak on x = 0: {peak:.3e}");
    println!(
        "at x = {:.1} um the maximum sits at t = {:.1} fs with {:.3e}",
        xa.coord(ix),
        ts[imax],
        row[imax]
    );
    Ok((peak, ts[imax]))
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
