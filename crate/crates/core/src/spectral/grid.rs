use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Relative tolerance used when deciding whether a frequency sits on a grid bin.
const ALIGN_TOL: f64 = 1e-9;

/// Paired time and angular-frequency grids sharing one sample count.
///
/// Both axes are centered: `t_n = (n - N/2) dt` and `ω_n = (n - N/2) dω`
/// with `dω = 2π / (N dt)`. The zero of each axis lives at index `N/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualGrid {
    n: usize,
    dt: f64,
}

impl DualGrid {
    pub fn new(n_samples: usize, dt: f64) -> Result<Self> {
        if n_samples < 8 || !n_samples.is_power_of_two() {
            return Err(Error::InvalidGrid(format!(
                "n_samples must be a power of two >= 8, got {n_samples}"
            )));
        }
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::InvalidGrid(format!("dt must be positive and finite, got {dt}")));
        }
        Ok(Self { n: n_samples, dt })
    }

    /// Grid with `n_samples` points spanning `t_total` in time.
    pub fn with_duration(n_samples: usize, t_total: f64) -> Result<Self> {
        Self::new(n_samples, t_total / n_samples as f64)
    }

    /// Grid with `n_samples` points and frequency spacing `dw`.
    pub fn with_frequency_step(n_samples: usize, dw: f64) -> Result<Self> {
        Self::new(n_samples, TAU / (n_samples as f64 * dw))
    }

    #[inline]
    pub fn n_samples(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dt(&self) -> f64 {
        self.dt
    }

    #[inline]
    pub fn dw(&self) -> f64 {
        TAU / (self.n as f64 * self.dt)
    }

    #[inline]
    pub fn t_total(&self) -> f64 {
        self.n as f64 * self.dt
    }

    /// Index of the zero bin on either axis.
    #[inline]
    pub fn center(&self) -> usize {
        self.n / 2
    }

    #[inline]
    pub fn time(&self, idx: usize) -> f64 {
        (idx as f64 - self.center() as f64) * self.dt
    }

    #[inline]
    pub fn freq(&self, idx: usize) -> f64 {
        (idx as f64 - self.center() as f64) * self.dw()
    }

    pub fn w_min(&self) -> f64 {
        self.freq(0)
    }

    pub fn w_max(&self) -> f64 {
        self.freq(self.n - 1)
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.time(i))
    }

    pub fn freqs(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.freq(i))
    }

    /// Integer `m` such that `w = m dω`, or an alignment error.
    pub fn bin_offset(&self, w: f64, what: &str) -> Result<i64> {
        let dw = self.dw();
        let m = (w / dw).round();
        if !w.is_finite() || (w - m * dw).abs() > ALIGN_TOL * dw.max(w.abs()) {
            return Err(Error::Misaligned {
                what: what.to_string(),
                value: w,
                dw,
            });
        }
        Ok(m as i64)
    }

    /// Bin offset of the grid point nearest to `w` (explicit snapping).
    pub fn nearest_bin_offset(&self, w: f64) -> i64 {
        (w / self.dw()).round() as i64
    }

    /// Array index of the bin `m` steps from the center, if it exists.
    pub fn index_of_offset(&self, m: i64) -> Option<usize> {
        let idx = self.center() as i64 + m;
        (0..self.n as i64).contains(&idx).then_some(idx as usize)
    }

    /// Array index of an aligned frequency that lies on the grid.
    pub fn freq_index(&self, w: f64, what: &str) -> Result<usize> {
        let m = self.bin_offset(w, what)?;
        self.index_of_offset(m).ok_or_else(|| {
            Error::OutOfRange(format!(
                "{what} = {w} lies outside [{}, {}]",
                self.w_min(),
                self.w_max()
            ))
        })
    }

    /// Grid with `factor` times more samples at `dt / factor`: same `dω`,
    /// frequency support widened by `factor`.
    pub fn oversampled(&self, factor: usize) -> Result<Self> {
        if factor == 0 || !factor.is_power_of_two() {
            return Err(Error::param("oversample", format!("must be a power of two, got {factor}")));
        }
        Self::new(self.n * factor, self.dt / factor as f64)
    }

    /// Grid with `factor` times more samples at the same `dt`: `dω / factor`.
    pub fn refined(&self, factor: usize) -> Result<Self> {
        if factor == 0 || !factor.is_power_of_two() {
            return Err(Error::param("refine", format!("must be a power of two, got {factor}")));
        }
        Self::new(self.n * factor, self.dt)
    }

    pub fn same_dw(&self, other: &DualGrid) -> bool {
        (self.dw() - other.dw()).abs() <= 1e-12 * self.dw()
    }

    pub fn same_dt(&self, other: &DualGrid) -> bool {
        (self.dt - other.dt).abs() <= 1e-12 * self.dt
    }

    /// Same shape and spacing up to floating-point noise.
    pub fn matches(&self, other: &DualGrid) -> bool {
        self.n == other.n && self.same_dt(other)
    }

    pub fn ensure_matches(&self, other: &DualGrid) -> Result<()> {
        if self.matches(other) {
            Ok(())
        } else {
            Err(Error::GridMismatch(format!(
                "(N = {}, dt = {}) vs (N = {}, dt = {})",
                self.n, self.dt, other.n, other.dt
            )))
        }
    }

    /// Number of whole copies of `window` in the time span, if it divides evenly.
    pub fn copies_of(&self, window: f64) -> Result<usize> {
        let span = self.t_total();
        if !(window.is_finite() && window > 0.0) || window > span * (1.0 + 1e-12) {
            return Err(Error::Padding { window, span });
        }
        let p = (span / window).round();
        if (span / window - p).abs() > 1e-9 * p {
            return Err(Error::Padding { window, span });
        }
        Ok(p as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reciprocity_is_exact() {
        for &(n, dt) in &[(8usize, 1.0), (1024, 0.37), (4096, 1e-3), (64, 17.0)] {
            let g = DualGrid::new(n, dt).unwrap();
            let prod = g.dw() * g.dt() * n as f64;
            assert!((prod - TAU).abs() <= 4.0 * f64::EPSILON * TAU);
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(DualGrid::new(6, 1.0).is_err());
        assert!(DualGrid::new(100, 1.0).is_err());
        assert!(DualGrid::new(4, 1.0).is_err());
        assert!(DualGrid::new(16, 0.0).is_err());
        assert!(DualGrid::new(16, f64::NAN).is_err());
    }

    #[test]
    fn axes_are_centered() {
        let g = DualGrid::new(16, 0.5).unwrap();
        assert_eq!(g.time(8), 0.0);
        assert_eq!(g.freq(8), 0.0);
        assert_eq!(g.time(0), -4.0);
        assert!((g.w_max() - 7.0 * g.dw()).abs() < 1e-15);
    }

    #[test]
    fn alignment_and_snapping() {
        let g = DualGrid::new(64, 1.0).unwrap();
        assert_eq!(g.bin_offset(3.0 * g.dw(), "w").unwrap(), 3);
        assert!(g.bin_offset(3.4 * g.dw(), "w").is_err());
        assert_eq!(g.nearest_bin_offset(3.4 * g.dw()), 3);
        assert!(g.freq_index(40.0 * g.dw(), "w").is_err());
        assert_eq!(g.freq_index(-32.0 * g.dw(), "w").unwrap(), 0);
    }

    #[test]
    fn oversampling_keeps_frequency_step() {
        let g = DualGrid::new(128, 1.0).unwrap();
        let o = g.oversampled(4).unwrap();
        assert!(g.same_dw(&o));
        assert_eq!(o.n_samples(), 512);
        let r = g.refined(4).unwrap();
        assert!((r.dw() * 4.0 - g.dw()).abs() < 1e-15);
    }

    #[test]
    fn window_copies() {
        let g = DualGrid::new(1024, 1.0).unwrap();
        assert_eq!(g.copies_of(64.0).unwrap(), 16);
        assert!(g.copies_of(100.0).is_err());
        assert!(g.copies_of(2048.0).is_err());
    }
}
