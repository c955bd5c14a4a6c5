use std::f64::consts::TAU;

use dyson_rft::potential::{PotentialModel, RampProfile, DEFAULT_STRENGTH};
use dyson_rft::spectral::{forward_ft, unit_delta, DualGrid};
use dyson_rft::{Complex64, Error};
use proptest::prelude::*;

proptest! {
    #[test]
    fn gaussian_spectrum_is_the_transform_of_its_samples(
        tau in 0.3f64..2.0,
        center in -3.0f64..3.0,
        strength in -1.0f64..1.0,
    ) {
        // t_total = 51.2 leaves at least 11 widths between the center and either edge.
        let g = DualGrid::new(512, 0.1).unwrap();
        let m = PotentialModel::gaussian_kick_at(tau, center).with_strength(strength);
        let closed = m.spectrum(&g).unwrap();
        let sampled = forward_ft(&m.sample_time(&g).unwrap()).unwrap();
        prop_assert!(closed.sub(&sampled).unwrap().norm_l2() <= 1e-6 * closed.norm_l2().max(1e-300));
    }

    #[test]
    fn tabulated_spectrum_matches_the_gaussian_it_samples(tau in 0.5f64..2.0, center in -2.0f64..2.0) {
        let g = DualGrid::new(256, 0.1).unwrap();
        let gauss = PotentialModel::gaussian_kick_at(tau, center).with_strength(1.0);
        let samples = gauss.sample_time(&g).unwrap().into_values();
        let tab = PotentialModel::tabulated(g, samples).unwrap().with_strength(1.0);
        let a = tab.spectrum(&g).unwrap();
        prop_assert!(a.relative_l2(&gauss.spectrum(&g).unwrap()).unwrap() < 1e-6);
        // Between nodes the band-limited interpolant tracks the smooth curve.
        for j in 0..20 {
            let t = center - 1.0 + 0.1 * j as f64 + 0.037;
            prop_assert!((tab.value_at(t) - gauss.value_at(t)).norm() < 1e-8);
        }
    }
}

#[test]
fn lorentzian_narrows_toward_a_delta() {
    let g = DualGrid::new(1024, 0.1).unwrap();
    let w_d = 40.0 * g.dw();
    let delta = unit_delta(&g, w_d).unwrap();
    let mut last = f64::INFINITY;
    for eps_bins in [8.0, 4.0, 2.0] {
        let m = PotentialModel::ramped_oscillator(eps_bins * g.dw(), w_d, RampProfile::TwoSided).with_strength(1.0);
        // Symmetric convention: unit-area weight is √(2π).
        let s = m.spectrum(&g).unwrap().scaled(Complex64::new(1.0 / TAU.sqrt(), 0.0));
        let l1: f64 = s.values().iter().zip(delta.values()).map(|(a, b)| (a - b).norm()).sum::<f64>() * g.dw();
        assert!(l1 < last, "ε = {eps_bins} dω: L1 {l1} did not shrink from {last}");
        last = l1;
    }
}

#[test]
fn two_sided_ramp_closed_form_approaches_sampled_transform() {
    // The envelope has a kink at t = 0, so sampled transforms alias with an
    // error that falls as the step shrinks.
    let mut last = f64::INFINITY;
    for n in [512usize, 2048, 8192] {
        let g = DualGrid::with_duration(n, 200.0).unwrap();
        let m = PotentialModel::ramped_oscillator(0.5, 10.0 * g.dw(), RampProfile::TwoSided).with_strength(1.0);
        let err = m
            .spectrum(&g)
            .unwrap()
            .relative_l2(&forward_ft(&m.sample_time(&g).unwrap()).unwrap())
            .unwrap();
        assert!(err < last, "N = {n}: {err} vs {last}");
        last = err;
    }
    assert!(last < 1e-3);
}

#[test]
fn spike_weights_follow_the_symmetric_convention() {
    let g = DualGrid::new(128, 0.25).unwrap();
    let w_d = 5.0 * g.dw();
    let root = TAU.sqrt();
    let c = PotentialModel::constant_bias().with_strength(0.3).spectrum(&g).unwrap();
    assert!((c.at_offset(0).unwrap() * g.dw() - root * 0.3).norm() < 1e-14);

    let h = PotentialModel::harmonic_drive(w_d).with_strength(1.0).spectrum(&g).unwrap();
    for m in [-5, 5] {
        assert!((h.at_offset(m).unwrap() * g.dw() - root).norm() < 1e-14);
    }
    let r = PotentialModel::resonant_drive(w_d).with_strength(1.0).spectrum(&g).unwrap();
    assert!((r.at_offset(5).unwrap() * g.dw() - root).norm() < 1e-14);
    assert_eq!(r.at_offset(-5).unwrap(), Complex64::new(0.0, 0.0));
}

#[test]
fn default_strength_keeps_the_potential_weak() {
    assert_eq!(DEFAULT_STRENGTH, 0.1);
    let m = PotentialModel::gaussian_kick(1.0);
    assert!(m.value_at(0.0).norm() <= 0.1 + 1e-15);
    let h = PotentialModel::resonant_drive(1.0);
    assert!((h.value_at(0.7).norm() - 0.1).abs() < 1e-15);
}

#[test]
fn one_sided_ramp_is_flat_after_zero() {
    let m = PotentialModel::ramped_oscillator(0.5, 2.0, RampProfile::OneSided).with_strength(1.0);
    assert!((m.value_at(3.0).norm() - 1.0).abs() < 1e-15);
    assert!((m.value_at(-2.0).norm() - (-1.0f64).exp()).abs() < 1e-15);
}

#[test]
fn invalid_parameters_are_reported() {
    let g = DualGrid::new(64, 0.5).unwrap();
    let off_grid = PotentialModel::harmonic_drive(0.37 * g.dw());
    assert!(matches!(off_grid.validate(&g), Err(Error::Misaligned { .. })));
    assert!(PotentialModel::gaussian_kick(0.0).validate(&g).is_err());
    assert!(PotentialModel::ramped_oscillator(-1.0, 0.0, RampProfile::TwoSided).validate(&g).is_err());
    assert!(PotentialModel::constant_bias().with_strength(f64::NAN).validate(&g).is_err());
    let short = vec![Complex64::new(1.0, 0.0); 10];
    assert!(PotentialModel::tabulated(g, short).is_err());
}

#[test]
fn tabulated_file_round_trip() {
    let g = DualGrid::new(16, 0.5).unwrap();
    let text: String = g.times().map(|t| format!("{t} {},{}\n", t * 0.1, -t)).collect();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.txt");
    std::fs::write(&path, format!("# t re,im\n{text}")).unwrap();
    let m = PotentialModel::tabulated_from_file(&path, g).unwrap().with_strength(1.0);
    let s = m.sample_time(&g).unwrap();
    for (t, v) in g.times().zip(s.values()) {
        assert_eq!(*v, Complex64::new(t * 0.1, -t));
    }
    let shifted: String = g.times().map(|t| format!("{} 1,0\n", t + 0.1)).collect();
    assert!(matches!(PotentialModel::tabulated_from_str(&shifted, g), Err(Error::GridMismatch(_))));
    assert!(matches!(PotentialModel::tabulated_from_str("0.0 1;0\n", g), Err(Error::Parse(_))));
}
