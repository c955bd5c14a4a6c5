use std::f64::consts::TAU;

use num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

use super::grid::DualGrid;
use super::signal::{Domain, SpectralSignal};
use crate::error::Result;

/// `(-1)^k` as a real factor.
#[inline]
fn alt(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// In-place unnormalized DFT. `Inverse` is the `e^{+2πi kn/N}` direction.
pub(crate) fn dft_in_place(buf: &mut [Complex64], direction: FftDirection) {
    let mut planner = FftPlanner::new();
    planner.plan_fft(buf.len(), direction).process(buf);
}

/// Centered-grid transform with a `(-1)^{n+m+N/2}` phase around a plain DFT.
fn centered_dft(values: &[Complex64], direction: FftDirection, scale: f64) -> Vec<Complex64> {
    let n = values.len();
    let h = n / 2;
    let mut buf: Vec<Complex64> = values.iter().enumerate().map(|(i, v)| v * alt(i)).collect();
    dft_in_place(&mut buf, direction);
    let s = scale * alt(h);
    for (i, v) in buf.iter_mut().enumerate() {
        *v *= s * alt(i);
    }
    buf
}

/// `F(ω_m) = dt/√(2π) Σ_n f(t_n) e^{+iω_m t_n}`.
///
/// Riemann approximation to the symmetric continuous transform
/// `(1/√(2π)) ∫ f(t) e^{iωt} dt`, so `Σ|F|² dω = Σ|f|² dt`.
pub fn forward_ft(signal: &SpectralSignal) -> Result<SpectralSignal> {
    signal.expect_domain(Domain::Time)?;
    let g = *signal.grid();
    let values = centered_dft(signal.values(), FftDirection::Inverse, g.dt() / TAU.sqrt());
    Ok(SpectralSignal::from_raw(g, Domain::Frequency, values))
}

/// `f(t_n) = dω/√(2π) Σ_m F(ω_m) e^{-iω_m t_n}`, the exact inverse of [`forward_ft`].
pub fn inverse_ft(signal: &SpectralSignal) -> Result<SpectralSignal> {
    signal.expect_domain(Domain::Frequency)?;
    let g = *signal.grid();
    let values = centered_dft(signal.values(), FftDirection::Forward, g.dw() / TAU.sqrt());
    Ok(SpectralSignal::from_raw(g, Domain::Time, values))
}

/// Convenience: samples a time function and transforms it.
pub fn forward_ft_of(grid: &DualGrid, f: impl Fn(f64) -> Complex64) -> Result<SpectralSignal> {
    forward_ft(&SpectralSignal::from_fn(*grid, Domain::Time, f)?)
}
