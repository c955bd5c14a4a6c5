use std::f64::consts::TAU;

use dyson_rft::oracle::{direct_second_order, QuadratureConfig};
use dyson_rft::potential::PotentialModel;
use dyson_rft::second_order::{
    impulse_response, second_order_amplitude, second_order_golden_rule, second_order_unnormalized,
    transfer_function,
};
use dyson_rft::spectral::DualGrid;
use dyson_rft::transition::{KEqualsIMode, TransitionSpec};
use dyson_rft::{Complex64, Error};
use proptest::prelude::*;

fn flat() -> PotentialModel {
    PotentialModel::constant_bias().with_strength(1.0)
}

fn small() -> (DualGrid, TransitionSpec, PotentialModel) {
    let g = DualGrid::new(128, 0.25).unwrap();
    let spec = TransitionSpec::cyclotron(&g, 4).with_k_max(2).with_mode(KEqualsIMode::Literal);
    let spec = spec.clone().with_offset(-spec.window / 2.0);
    let kick = PotentialModel::gaussian_kick_at(spec.window / 4.0, 0.0);
    (g, spec, kick)
}

#[test]
fn agrees_with_nested_quadrature_on_a_small_case() {
    let (g, spec, kick) = small();
    let a = second_order_amplitude(&spec, &kick, &g).unwrap();
    let b = direct_second_order(&spec, &kick, &g, &QuadratureConfig::midpoint(512)).unwrap();
    let e = a.relative_l2(&b).unwrap();
    assert!(e < 5e-2, "{e:e}");
}

#[test]
fn pure_tone_matches_the_closed_form() {
    let g = DualGrid::new(512, 1.0).unwrap();
    let spec = TransitionSpec::cyclotron(&g, 16).with_k_max(3).with_mode(KEqualsIMode::Literal);
    let w_d = 10.0 * spec.omega0;
    let tone = PotentialModel::resonant_drive(w_d).with_strength(1.0);
    let a = second_order_amplitude(&spec, &tone, &g).unwrap();
    let b = second_order_golden_rule(&spec, w_d, &g).unwrap();
    let e = a.relative_l2(&b).unwrap();
    assert!(e < 1e-3, "{e:e}");
}

#[test]
fn modes_differ_only_through_the_initial_path() {
    let g = DualGrid::new(256, 0.5).unwrap();
    let base = TransitionSpec::cyclotron(&g, 8).with_k_max(3);
    let paper = second_order_amplitude(&base, &flat(), &g).unwrap();
    let literal = second_order_amplitude(&base.clone().with_mode(KEqualsIMode::Literal), &flat(), &g).unwrap();
    let diff = paper.sub(&literal).unwrap();
    assert!(diff.norm_l2() > 1e-6 * paper.norm_l2());

    // Remove the k = i path in both modes by moving the initial level off the lattice.
    let off = base.clone().with_initial_shift(2.0 * g.dw());
    let p = second_order_amplitude(&off, &flat(), &g).unwrap();
    let l = second_order_amplitude(&off.with_mode(KEqualsIMode::Literal), &flat(), &g).unwrap();
    assert_eq!(p, l);
}

#[test]
fn origin_spike_is_constant_before_normalization() {
    let g = DualGrid::new(512, 1.0).unwrap();
    let mut raw = Vec::new();
    let mut norm = Vec::new();
    for k_max in [2usize, 4, 8] {
        let spec = TransitionSpec::cyclotron(&g, 16).with_k_max(k_max);
        let w_i = spec.omega_i();
        raw.push(second_order_unnormalized(&spec, &flat(), &g).unwrap().at_frequency(w_i).unwrap());
        norm.push(second_order_amplitude(&spec, &flat(), &g).unwrap().at_frequency(w_i).unwrap());
    }
    for r in &raw[1..] {
        assert!((r - raw[0]).norm() < 1e-9 * raw[0].norm(), "{r} vs {}", raw[0]);
    }
    for (n, k_max) in norm.iter().zip([2.0, 4.0, 8.0]) {
        assert!((n * k_max - raw[0]).norm() < 1e-9 * raw[0].norm());
    }
}

#[test]
fn transfer_spikes_sit_on_the_level_lattice() {
    let g = DualGrid::new(512, 0.1).unwrap();
    let copies = 8i64;
    let spec = TransitionSpec::cyclotron(&g, copies as usize).with_mode(KEqualsIMode::Literal);
    let kick = PotentialModel::gaussian_kick_at(spec.window / 6.0, spec.window / 2.0).with_strength(1.0);
    for k in [-2i64, 1, 3] {
        let tf = transfer_function(&impulse_response(&spec, &kick, &g, k).unwrap(), &spec, &g).unwrap();
        let peak = (-40..=40).map(|m| tf.spike_weight(m).unwrap().norm()).fold(0.0, f64::max);
        for m in -40i64..=40 {
            let w = tf.spike_weight(m).unwrap().norm();
            if m % copies != 0 {
                assert!(w < 1e-9 * peak, "k = {k}, bin {m}: {w:e}");
            }
        }
        for m in [-copies, copies] {
            assert!(tf.spike_weight(m).unwrap().norm() > 1e-3 * peak, "k = {k}: sideband {m} vanished");
        }
    }
}

#[test]
fn default_mode_initial_path_is_a_bare_delta() {
    let g = DualGrid::new(128, 1.0).unwrap();
    let spec = TransitionSpec::cyclotron(&g, 8).with_initial(-1);
    let kick = PotentialModel::gaussian_kick_at(3.0, 8.0);
    let tf = transfer_function(&impulse_response(&spec, &kick, &g, -1).unwrap(), &spec, &g).unwrap();
    assert!(tf.delta_like);
    assert_eq!(tf.spike_weight(0).unwrap(), Complex64::new(TAU, 0.0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn linear_in_couplings_and_quadratic_in_strength(
        a_re in -2.0f64..2.0, a_im in -2.0f64..2.0,
        v_re in -2.0f64..2.0, v_im in -2.0f64..2.0,
        s in 0.1f64..3.0,
    ) {
        let (g, spec, kick) = small();
        let base = second_order_amplitude(&spec, &kick.clone().with_strength(1.0), &g).unwrap();
        let mut scaled = spec.clone();
        scaled.amplitude = Complex64::new(a_re, a_im);
        scaled.v_fk_v_ki = Complex64::new(v_re, v_im);
        let out = second_order_amplitude(&scaled, &kick.with_strength(s), &g).unwrap();
        let expect = base.scaled(scaled.amplitude * scaled.v_fk_v_ki * s * s);
        prop_assert!(out.sub(&expect).unwrap().norm_l2() <= 1e-10 * (1e-300 + expect.norm_l2()));
    }
}

#[test]
fn reruns_are_bit_identical() {
    let (g, spec, kick) = small();
    let a = second_order_amplitude(&spec, &kick, &g).unwrap();
    let b = second_order_amplitude(&spec, &kick, &g).unwrap();
    assert_eq!(a, b);
}

#[test]
fn resonant_pole_is_an_error_unless_skipped() {
    let g = DualGrid::new(512, 1.0).unwrap();
    let spec = TransitionSpec::cyclotron(&g, 16).with_k_max(4);
    let w_d = 2.0 * spec.omega0;
    assert!(matches!(second_order_golden_rule(&spec, w_d, &g), Err(Error::ResonantPole { k: 2 })));
    let skipped = second_order_golden_rule(&spec.with_skip_poles(true), w_d, &g).unwrap();
    assert!(skipped.values().iter().all(|v| v.re.is_finite() && v.im.is_finite()));
}

#[test]
fn off_lattice_levels_are_rejected() {
    let g = DualGrid::new(256, 1.0).unwrap();
    let mut spec = TransitionSpec::cyclotron(&g, 8);
    spec.cyclotron = false;
    spec.omega0 = 8.5 * g.dw();
    assert!(matches!(
        second_order_amplitude(&spec, &flat(), &g),
        Err(Error::Misaligned { .. })
    ));
    let spec = TransitionSpec::cyclotron(&g, 8).with_initial_shift(0.25 * g.dw());
    assert!(matches!(
        second_order_amplitude(&spec, &flat(), &g),
        Err(Error::Misaligned { .. })
    ));
    let spec = TransitionSpec::cyclotron(&g, 8).with_k_max(0);
    assert!(second_order_amplitude(&spec, &flat(), &g).is_err());
}
