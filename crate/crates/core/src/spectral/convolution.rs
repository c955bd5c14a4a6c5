use num_complex::Complex64;
use rustfft::FftDirection;

use super::grid::DualGrid;
use super::signal::{Domain, SpectralSignal};
use super::transform::dft_in_place;
use crate::error::{Error, Result};

/// Full linear convolution `c[q] = Σ_j x[j] y[q-j]`, length `|x| + |y| - 1`.
pub(crate) fn linear_convolution(x: &[Complex64], y: &[Complex64]) -> Vec<Complex64> {
    let len = x.len() + y.len() - 1;
    let size = len.next_power_of_two();
    let zero = Complex64::new(0.0, 0.0);
    let mut a = vec![zero; size];
    let mut b = vec![zero; size];
    a[..x.len()].copy_from_slice(x);
    b[..y.len()].copy_from_slice(y);
    dft_in_place(&mut a, FftDirection::Forward);
    dft_in_place(&mut b, FftDirection::Forward);
    for (u, v) in a.iter_mut().zip(&b) {
        *u *= v;
    }
    dft_in_place(&mut a, FftDirection::Inverse);
    let scale = 1.0 / size as f64;
    a.truncate(len);
    for v in &mut a {
        *v *= scale;
    }
    a
}

/// `(a ∗ b)(ω_m) = dω Σ_j a(ω_j) b(ω_m - ω_j)` on one frequency grid.
///
/// Both inputs are treated as zero outside the grid (zero-padded to `2N`,
/// no wrap-around), and the result is cropped back to the same `N` bins.
pub fn convolve(a: &SpectralSignal, b: &SpectralSignal) -> Result<SpectralSignal> {
    a.expect_domain(Domain::Frequency)?;
    a.ensure_compatible(b)?;
    let g = *a.grid();
    let n = g.n_samples();
    let h = g.center();
    let full = linear_convolution(a.values(), b.values());
    let dw = g.dw();
    // full[q] pairs frequencies summing to (q - 2h) dω, so bin m sits at q = m + h.
    let values = (0..n).map(|m| full[m + h] * dw).collect();
    Ok(SpectralSignal::from_raw(g, Domain::Frequency, values))
}

/// `out(ω'_m) = dω Σ_j a(ω_j) K(ω'_m - ω_j)` with a closed-form kernel `K`.
///
/// The kernel is evaluated at every frequency difference that occurs, so no
/// part of it is truncated. `out_grid` must share `dω` with the input and
/// may be narrower or wider.
pub fn convolve_kernel(
    a: &SpectralSignal,
    out_grid: &DualGrid,
    kernel: impl Fn(f64) -> Complex64,
) -> Result<SpectralSignal> {
    a.expect_domain(Domain::Frequency)?;
    let g = *a.grid();
    if !g.same_dw(out_grid) {
        return Err(Error::GridMismatch(format!(
            "kernel convolution needs equal frequency steps ({} vs {})",
            g.dw(),
            out_grid.dw()
        )));
    }
    let n = g.n_samples() as i64;
    let n_out = out_grid.n_samples() as i64;
    let dw = g.dw();
    // ω'_m - ω_j = (m - j + off) dω
    let off = g.center() as i64 - out_grid.center() as i64;
    let d_min = off - (n - 1);
    let d_max = n_out - 1 + off;
    let k: Vec<Complex64> = (d_min..=d_max).map(|d| kernel(d as f64 * dw)).collect();
    let full = linear_convolution(a.values(), &k);
    // q = j + (d - d_min) = m + off - d_min
    let shift = (off - d_min) as usize;
    let values = (0..n_out as usize).map(|m| full[m + shift] * dw).collect();
    Ok(SpectralSignal::from_raw(*out_grid, Domain::Frequency, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::DeltaSpike;

    fn gaussian(grid: DualGrid, s: f64, c: f64) -> SpectralSignal {
        SpectralSignal::from_fn(grid, Domain::Frequency, |w| {
            Complex64::new((-(w - c) * (w - c) / (2.0 * s * s)).exp(), 0.0)
        })
        .unwrap()
    }

    #[test]
    fn matches_direct_sum() {
        let g = DualGrid::new(32, 0.5).unwrap();
        let a = gaussian(g, 1.0, 0.5);
        let b = SpectralSignal::from_fn(g, Domain::Frequency, |w| Complex64::new(0.1 * w, (w / 3.0).cos()))
            .unwrap();
        let c = convolve(&a, &b).unwrap();
        let h = 16i64;
        for m in 0..32i64 {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..32i64 {
                let k = m - j + h;
                if (0..32).contains(&k) {
                    acc += a.values()[j as usize] * b.values()[k as usize];
                }
            }
            acc *= g.dw();
            assert!((acc - c.values()[m as usize]).norm() < 1e-12);
        }
    }

    #[test]
    fn gaussians_convolve_to_a_wider_gaussian() {
        let g = DualGrid::new(512, 0.05).unwrap();
        let (s1, s2) = (2.0, 3.0);
        let c = convolve(&gaussian(g, s1, 1.0), &gaussian(g, s2, -2.0)).unwrap();
        let s = (s1 * s1 + s2 * s2).sqrt();
        let expect = gaussian(g, s, -1.0).scaled(Complex64::new(
            std::f64::consts::TAU.sqrt() * s1 * s2 / s,
            0.0,
        ));
        assert!(c.relative_l2(&expect).unwrap() < 1e-10);
    }

    #[test]
    fn kernel_form_agrees_with_rendered_kernel() {
        let g = DualGrid::new(64, 1.0).unwrap();
        let a = gaussian(g, 0.15, 0.0);
        let kern = |w: f64| Complex64::new((-w * w).exp(), w);
        let rendered = SpectralSignal::from_fn(g, Domain::Frequency, kern).unwrap();
        let direct = convolve(&a, &rendered).unwrap();
        let closed = convolve_kernel(&a, &g, kern).unwrap();
        // Away from the edges the rendered kernel is not truncated.
        for m in 24..40 {
            assert!((direct.values()[m] - closed.values()[m]).norm() < 1e-12);
        }
    }

    #[test]
    fn delta_is_the_identity() {
        let g = DualGrid::new(64, 1.0).unwrap();
        let a = gaussian(g, 0.4, 0.2);
        let d = DeltaSpike::unit(0.0).render(&g).unwrap();
        let c = convolve(&a, &d).unwrap();
        assert!(c.relative_l2(&a).unwrap() < 1e-13);
    }
}
