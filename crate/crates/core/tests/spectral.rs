use std::f64::consts::{PI, TAU};

use dyson_rft::spectral::{
    convolve, forward_ft, forward_ft_of, inverse_ft, unit_delta, windowed_sinc_spectrum, DeltaSpike, Domain,
    DualGrid, SpectralSignal,
};
use dyson_rft::Complex64;
use proptest::prelude::*;

fn signal(grid: DualGrid, domain: Domain, v: Vec<(f64, f64)>) -> SpectralSignal {
    SpectralSignal::new(grid, domain, v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap()
}

fn sizes() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![8usize, 16, 64, 128, 256, 1024])
}

fn grid_and_values() -> impl Strategy<Value = (DualGrid, Vec<(f64, f64)>)> {
    (sizes(), 0.01f64..3.0).prop_flat_map(|(n, dt)| {
        (
            Just(DualGrid::new(n, dt).unwrap()),
            prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n),
        )
    })
}

/// Random values confined to the central `n / 8` bins.
fn compact(n: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n / 8).prop_map(move |inner| {
        let mut v = vec![(0.0, 0.0); n];
        let start = n / 2 - n / 16;
        v[start..start + inner.len()].copy_from_slice(&inner);
        v
    })
}

proptest! {
    #[test]
    fn grid_duality_is_exact(n in sizes(), dt in 1e-4f64..1e3) {
        let g = DualGrid::new(n, dt).unwrap();
        prop_assert!((g.dw() * g.dt() * n as f64 / TAU - 1.0).abs() < 1e-14);
        prop_assert_eq!(g.freq(g.center()), 0.0);
        prop_assert_eq!(g.time(g.center()), 0.0);
    }

    #[test]
    fn round_trip_recovers_the_signal((g, v) in grid_and_values()) {
        let f = signal(g, Domain::Time, v);
        let back = inverse_ft(&forward_ft(&f).unwrap()).unwrap();
        prop_assert!(back.relative_l2(&f).unwrap() < 1e-12);
    }

    #[test]
    fn parseval((g, v) in grid_and_values()) {
        let f = signal(g, Domain::Time, v);
        let spec = forward_ft(&f).unwrap();
        let et: f64 = f.values().iter().map(|x| x.norm_sqr()).sum::<f64>() * g.dt();
        let ew: f64 = spec.values().iter().map(|x| x.norm_sqr()).sum::<f64>() * g.dw();
        prop_assert!((et - ew).abs() <= 1e-10 * et);
    }

    #[test]
    fn convolution_is_bilinear_and_commutative(
        (g, a, b, c) in sizes().prop_flat_map(|n| (
            Just(DualGrid::new(n, 0.5).unwrap()),
            prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n),
            prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n),
            prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n),
        )),
        alpha in -3.0f64..3.0,
    ) {
        let (a, b, c) = (signal(g, Domain::Frequency, a), signal(g, Domain::Frequency, b), signal(g, Domain::Frequency, c));
        let ab = convolve(&a, &b).unwrap();
        prop_assert!(ab.relative_l2(&convolve(&b, &a).unwrap()).unwrap() < 1e-12);
        let lhs = convolve(&a.scaled(Complex64::new(alpha, 0.0)).add(&c).unwrap(), &b).unwrap();
        let rhs = ab.scaled(Complex64::new(alpha, 0.0)).add(&convolve(&c, &b).unwrap()).unwrap();
        prop_assert!((lhs.sub(&rhs).unwrap().norm_l2()) <= 1e-12 * (1.0 + rhs.norm_l2()));
    }

    #[test]
    fn convolution_is_associative_for_compact_signals(
        (g, a, b, c) in prop::sample::select(vec![64usize, 128, 512]).prop_flat_map(|n| (
            Just(DualGrid::new(n, 0.2).unwrap()), compact(n), compact(n), compact(n),
        )),
    ) {
        let (a, b, c) = (signal(g, Domain::Frequency, a), signal(g, Domain::Frequency, b), signal(g, Domain::Frequency, c));
        let left = convolve(&convolve(&a, &b).unwrap(), &c).unwrap();
        let right = convolve(&a, &convolve(&b, &c).unwrap()).unwrap();
        prop_assert!(left.relative_l2(&right).unwrap() < 1e-9);
    }

    #[test]
    fn delta_at_zero_is_the_identity((g, v) in grid_and_values()) {
        let f = signal(g, Domain::Frequency, v);
        let out = convolve(&f, &unit_delta(&g, 0.0).unwrap()).unwrap();
        prop_assert!(out.relative_l2(&f).unwrap() < 1e-12);
    }

    #[test]
    fn delta_shifts_by_whole_bins((g, v) in grid_and_values(), shift in -3i64..=3) {
        let f = signal(g, Domain::Frequency, v);
        let spike = DeltaSpike::unit(shift as f64 * g.dw());
        let direct = spike.apply_to(&f).unwrap();
        let via_conv = convolve(&f, &spike.render(&g).unwrap()).unwrap();
        prop_assert!(direct.sub(&via_conv).unwrap().norm_l2() <= 1e-12 * (1.0 + f.norm_l2()));
        for m in -(g.center() as i64)..(g.n_samples() - g.center()) as i64 {
            if let Some(src) = f.at_offset(m - shift) {
                prop_assert!((direct.at_offset(m).unwrap() - src).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn centered_sinc_is_real_at_origin_and_even(n in sizes(), dt in 0.05f64..2.0, copies in prop::sample::select(vec![1usize, 2, 4])) {
        let g = DualGrid::new(n, dt).unwrap();
        let t = g.t_total() / copies as f64;
        let s = windowed_sinc_spectrum(t, 0.0, &g).unwrap();
        let at0 = s.at_offset(0).unwrap();
        prop_assert!(at0.im.abs() < 1e-15 * t && (at0.re - t).abs() < 1e-12 * t);
        for m in 1..(n / 2) as i64 {
            let (p, q) = (s.at_offset(m).unwrap().norm(), s.at_offset(-m).unwrap().norm());
            prop_assert!((p - q).abs() <= 1e-12 * t);
        }
    }
}

#[test]
fn gaussian_is_self_dual() {
    let g = DualGrid::new(256, 0.1).unwrap();
    let sigma: f64 = 0.7;
    let f = forward_ft_of(&g, |t| Complex64::new((-t * t / (2.0 * sigma * sigma)).exp(), 0.0)).unwrap();
    let exact = SpectralSignal::from_fn(g, Domain::Frequency, |w| {
        Complex64::new(sigma * (-0.5 * w * w * sigma * sigma).exp(), 0.0)
    })
    .unwrap();
    assert!(f.relative_l2(&exact).unwrap() < 1e-12);
}

#[test]
fn rendered_window_matches_a_finely_sampled_rectangle() {
    // Half-weight edges turn the sampled rectangle into the trapezoid rule.
    let n = 1 << 15;
    let g = DualGrid::new(n, 1.0 / 256.0).unwrap();
    let (t, r) = (8.0, -3.0);
    let f = forward_ft_of(&g, |x| {
        let inside = x > r + 1e-12 && x < r + t - 1e-12;
        let edge = (x - r).abs() < 1e-12 || (x - r - t).abs() < 1e-12;
        Complex64::new(if inside { 1.0 } else if edge { 0.5 } else { 0.0 }, 0.0)
    })
    .unwrap();
    let s = windowed_sinc_spectrum(t, r, &g).unwrap();
    for m in -40i64..=40 {
        let a = f.at_offset(m).unwrap() * (2.0 * PI).sqrt();
        let b = s.at_offset(m).unwrap();
        assert!((a - b).norm() < 1e-4, "bin {m}: {a} vs {b}");
    }
}

#[test]
fn misaligned_delta_is_rejected() {
    let g = DualGrid::new(64, 0.5).unwrap();
    assert!(DeltaSpike::unit(0.3 * g.dw()).render(&g).is_err());
    assert!(DualGrid::new(100, 0.1).is_err());
    assert!(DualGrid::new(4, 0.1).is_err());
    assert!(DualGrid::new(64, -1.0).is_err());
}
