use num_complex::Complex64;
use proptest::prelude::*;
use twinbeam::analytics::{central_band_law, mu_rms_width, Quantity};
use twinbeam::dispersion::{CrystalSpec, FourierMode, PumpSpec, SpaceTimePoint};
use twinbeam::fourier::{AxisKind, Dimensionality, GridSpec};
use twinbeam::qs::{kernel_parts, PeakKind, PhaseConvention, QsModel};

fn model(tau: f64, g: f64) -> QsModel {
    let crystal = CrystalSpec::bbo(2000.0).with_collinear_cut(0.515).unwrap();
    QsModel::new(crystal, PumpSpec::new(0.515, tau, 150.0, g).unwrap()).unwrap()
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn kernel_identity_on_both_sides_of_threshold(d in -40.0f64..40.0, ga in 0.0f64..4.0) {
        let (f1, f2, _) = kernel_parts(d, ga);
        prop_assert!((f1.norm_sqr() - f2.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn kernel_is_even_in_omega(om in -0.3f64..0.3, t in -300.0f64..300.0, g in 0.0f64..3.0) {
        let m = model(150.0, g);
        let xi = SpaceTimePoint::temporal(t);
        let a = m.kernel_eval(&FourierMode::temporal(om), &xi).unwrap();
        let b = m.kernel_eval(&FourierMode::temporal(-om), &xi).unwrap();
        prop_assert!(rel(a.f1, b.f1) < 1e-10 && rel(a.f2, b.f2) < 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coherence_is_hermitian_with_exact_phases(o1 in -0.2f64..0.2, o2 in -1.0f64..1.0, g in 0.1f64..3.0) {
        let m = model(150.0, g).with_phases(PhaseConvention::Exact);
        let grid = GridSpec::for_pump(&m.pump, Dimensionality::Temporal, 16.0, 8.0).unwrap();
        let (w1, w2) = (FourierMode::temporal(o1), FourierMode::temporal(o1 + 0.01 * o2));
        let g12 = m.coherence_full(&w1, &w2, &grid).unwrap();
        let g21 = m.coherence_full(&w2, &w1, &grid).unwrap();
        prop_assert!((g12 - g21.conj()).norm() <= 1e-10 * g12.norm().max(1e-300));
    }

    #[test]
    fn biphoton_exchange_on_the_conjugate_line(o1 in -0.25f64..0.25, g in 0.1f64..3.0) {
        for pc in [PhaseConvention::Transit, PhaseConvention::Exact] {
            let m = model(150.0, g).with_phases(pc);
            let grid = GridSpec::for_pump(&m.pump, Dimensionality::Temporal, 16.0, 8.0).unwrap();
            let (v1, v2) = (FourierMode::temporal(o1), FourierMode::temporal(-o1));
            let p12 = m.biphoton_full(&v1, &v2, &grid).unwrap();
            let p21 = m.biphoton_full(&v2, &v1, &grid).unwrap();
            prop_assert!(rel(p12, p21) < 1e-10, "{p12} {p21}");
        }
    }
}

#[test]
fn transit_phases_are_hermitian_to_quasi_stationary_accuracy() {
    let m = model(150.0, 1.0);
    let grid = GridSpec::for_pump(&m.pump, Dimensionality::Temporal, 16.0, 8.0).unwrap();
    let (w1, w2) = (FourierMode::temporal(-0.08), FourierMode::temporal(-0.075));
    let a = m.coherence_full(&w1, &w2, &grid).unwrap();
    let b = m.coherence_full(&w2, &w1, &grid).unwrap();
    assert!(rel(a, b.conj()) < 0.01);
}

#[test]
fn photon_number_parseval() {
    for g in [0.5, 2.0] {
        let m = model(150.0, g);
        let grid = GridSpec::for_pump(&m.pump, Dimensionality::Temporal, 16.0, 12.0).unwrap();
        let dw = grid.conjugate_cell();
        // Fourier side: diagonal of the full coherence; and of the factorized one.
        let mut n_full = 0.0;
        let mut n_fact = 0.0;
        for i in 0..grid.len() {
            let w = grid.mode(i);
            n_full += m.coherence_full(&w, &w, &grid).unwrap().re * dw;
            n_fact += m.factorized_moments(&w, &w, &grid).unwrap().1.re * dw;
        }
        // Space-time side: ∫dξ G1(ξ, ξ).
        let mut s_full = 0.0;
        let mut s_fact = 0.0;
        for j in 0..grid.len() {
            let xi = grid.point(j);
            let mut dens = 0.0;
            for i in 0..grid.len() {
                dens += m.kernel_eval(&grid.mode(i), &xi).unwrap().f2.norm_sqr();
            }
            s_full += dens * dw / grid.two_pi_power() * grid.cell();
            s_fact += m.spacetime_moments(&xi, &xi, &grid).unwrap().1.re * grid.cell();
        }
        assert!((n_full - s_full).abs() / n_full < 1e-6, "g {g}: {n_full} vs {s_full}");
        assert!((n_fact - s_fact).abs() / n_fact < 1e-6, "g {g}: {n_fact} vs {s_fact}");
    }
}

// Peak-normalised profiles along w0 at fixed Ω, full against factorized.
fn shape_errors(m: &QsModel, f: f64) -> (f64, f64) {
    let grid = GridSpec::for_pump(&m.pump, Dimensionality::Temporal, 16.0, 8.0).unwrap();
    let om = f * m.summary.omega_gvd;
    let sig = m.pump.sigma_omega();
    let w = FourierMode::temporal(om);
    let p0 = m.biphoton_full(&w, &-w, &grid).unwrap().norm();
    let g0 = m.coherence_full(&w, &w, &grid).unwrap().norm();
    let c0 = m.mu_peak(PeakKind::Corr, &FourierMode::ZERO, &grid).unwrap().norm();
    let h0 = m.mu_peak(PeakKind::Coh, &FourierMode::ZERO, &grid).unwrap().norm();
    let (mut ep, mut eg) = (0.0f64, 0.0f64);
    for k in -30..=30 {
        let w0 = 0.1 * k as f64 * sig;
        let p = m
            .biphoton_full(&w, &FourierMode::temporal(-om + w0), &grid)
            .unwrap()
            .norm()
            / p0;
        let g1 = m
            .coherence_full(&w, &FourierMode::temporal(om + w0), &grid)
            .unwrap()
            .norm()
            / g0;
        let c = m
            .mu_peak(PeakKind::Corr, &FourierMode::temporal(w0), &grid)
            .unwrap()
            .norm()
            / c0;
        let h = m
            .mu_peak(PeakKind::Coh, &FourierMode::temporal(w0), &grid)
            .unwrap()
            .norm()
            / h0;
        ep = ep.max((p - c).abs());
        eg = eg.max((g1 - h).abs());
    }
    (ep, eg)
}

#[test]
fn factorized_shapes_agree_in_band() {
    for g in [0.5, 1.0, 2.0] {
        let m = model(150.0, g);
        for f in [-1.0, -0.5, 0.0, 0.5, 1.0] {
            let (ep, eg) = shape_errors(&m, f);
            assert!(ep < 0.02 && eg < 0.02, "g {g}, Omega {f} Omega_GVD: {ep} {eg}");
        }
        let (ep, eg) = shape_errors(&m, 2.3);
        println!("g {g}: band-edge shape errors at 2.3 Omega_GVD: psi {ep:.4}, g1 {eg:.4}");
    }
}

#[test]
fn cross_to_auto_peak_ratio_falls_toward_one() {
    let mut last = f64::INFINITY;
    for g in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let m = model(150.0, g);
        let grid = GridSpec::for_pump(&m.pump, Dimensionality::Temporal, 16.0, 8.0).unwrap();
        let k = m.kernel_eval(&FourierMode::ZERO, &SpaceTimePoint::ORIGIN).unwrap();
        let c = m.mu_peak(PeakKind::Corr, &FourierMode::ZERO, &grid).unwrap();
        let h = m.mu_peak(PeakKind::Coh, &FourierMode::ZERO, &grid).unwrap();
        let ratio = (k.f1.norm_sqr() / k.f2.norm_sqr()) * (c.norm_sqr() / h.norm_sqr());
        assert!(ratio > 1.0 && ratio < last, "g {g}: {ratio}");
        last = ratio;
    }
    assert!(last < 1.1);
}

#[test]
fn mu_widths_scale_with_the_pump_bandwidth() {
    for g in [0.5, 3.0] {
        let a = model(150.0, g);
        let b = model(450.0, g);
        for kind in [PeakKind::Coh, PeakKind::Corr] {
            let ga = GridSpec::for_pump(&a.pump, Dimensionality::Temporal, 32.0, 8.0).unwrap();
            let gb = GridSpec::for_pump(&b.pump, Dimensionality::Temporal, 32.0, 8.0).unwrap();
            let wa = mu_rms_width(&a, kind, AxisKind::T, &ga).unwrap();
            let wb = mu_rms_width(&b, kind, AxisKind::T, &gb).unwrap();
            assert!((wa / wb - 3.0).abs() < 1e-6, "{kind:?} {wa} {wb}");
        }
    }
}

#[test]
fn psi_band_is_never_narrower_than_g1_band() {
    let mut prev = f64::INFINITY;
    for g in [0.05, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0] {
        let r =
            central_band_law(Quantity::SpectrumPsi, g).unwrap() / central_band_law(Quantity::SpectrumG1, g).unwrap();
        assert!(r >= 1.0 && r <= prev, "g {g}: {r}");
        prev = r;
    }
    assert!(prev - 1.0 < 1e-3);
}
