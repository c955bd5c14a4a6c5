use std::fmt;

use num_complex::Complex64;

use super::grid::DualGrid;
use super::transform::{forward_ft, inverse_ft};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Time,
    Frequency,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Time => f.write_str("time"),
            Domain::Frequency => f.write_str("frequency"),
        }
    }
}

/// Complex samples tagged with the grid and the axis they live on.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSignal {
    grid: DualGrid,
    domain: Domain,
    values: Vec<Complex64>,
}

impl SpectralSignal {
    pub fn new(grid: DualGrid, domain: Domain, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n_samples() {
            return Err(Error::GridMismatch(format!(
                "{} samples for a grid of {}",
                values.len(),
                grid.n_samples()
            )));
        }
        if let Some(i) = values.iter().position(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::NonFinite(format!("{domain}-domain sample {i}")));
        }
        Ok(Self { grid, domain, values })
    }

    pub(crate) fn from_raw(grid: DualGrid, domain: Domain, values: Vec<Complex64>) -> Self {
        debug_assert_eq!(values.len(), grid.n_samples());
        Self { grid, domain, values }
    }

    pub fn zeros(grid: DualGrid, domain: Domain) -> Self {
        Self::from_raw(grid, domain, vec![Complex64::new(0.0, 0.0); grid.n_samples()])
    }

    /// Samples `f` at every coordinate of the chosen axis.
    pub fn from_fn(grid: DualGrid, domain: Domain, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let values = (0..grid.n_samples())
            .map(|i| match domain {
                Domain::Time => f(grid.time(i)),
                Domain::Frequency => f(grid.freq(i)),
            })
            .collect();
        Self::new(grid, domain, values)
    }

    #[inline]
    pub fn grid(&self) -> &DualGrid {
        &self.grid
    }

    #[inline]
    pub fn domain(&self) -> Domain {
        self.domain
    }

    #[inline]
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn coordinate(&self, idx: usize) -> f64 {
        match self.domain {
            Domain::Time => self.grid.time(idx),
            Domain::Frequency => self.grid.freq(idx),
        }
    }

    pub fn coordinates(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.coordinate(i)).collect()
    }

    pub fn expect_domain(&self, domain: Domain) -> Result<()> {
        if self.domain == domain {
            Ok(())
        } else {
            Err(Error::WrongDomain {
                expected: domain,
                found: self.domain,
            })
        }
    }

    pub fn ensure_compatible(&self, other: &SpectralSignal) -> Result<()> {
        self.grid.ensure_matches(&other.grid)?;
        other.expect_domain(self.domain)
    }

    pub fn map(&self, f: impl Fn(f64, Complex64) -> Complex64) -> Self {
        let values = (0..self.len()).map(|i| f(self.coordinate(i), self.values[i])).collect();
        Self::from_raw(self.grid, self.domain, values)
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self::from_raw(self.grid, self.domain, self.values.iter().map(|v| v * c).collect())
    }

    pub fn add(&self, other: &SpectralSignal) -> Result<Self> {
        self.ensure_compatible(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Self::from_raw(self.grid, self.domain, values))
    }

    pub fn sub(&self, other: &SpectralSignal) -> Result<Self> {
        self.ensure_compatible(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(Self::from_raw(self.grid, self.domain, values))
    }

    pub(crate) fn accumulate(&mut self, other: &SpectralSignal) {
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a += b;
        }
    }

    /// Euclidean norm of the sample vector.
    pub fn norm_l2(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖self - reference‖ / ‖reference‖`.
    pub fn relative_l2(&self, reference: &SpectralSignal) -> Result<f64> {
        self.ensure_compatible(reference)?;
        Ok(relative_l2(&self.values, &reference.values))
    }

    pub fn max_abs_diff(&self, other: &SpectralSignal) -> Result<f64> {
        self.ensure_compatible(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Value at the bin `m` steps from the center.
    pub fn at_offset(&self, m: i64) -> Option<Complex64> {
        self.grid.index_of_offset(m).map(|i| self.values[i])
    }

    /// Value at an aligned frequency (frequency-domain signals only).
    pub fn at_frequency(&self, w: f64) -> Result<Complex64> {
        self.expect_domain(Domain::Frequency)?;
        Ok(self.values[self.grid.freq_index(w, "frequency")?])
    }

    /// Index of the largest magnitude (first one on ties).
    pub fn peak_index(&self) -> usize {
        let mut best = 0;
        for (i, v) in self.values.iter().enumerate() {
            if v.norm() > self.values[best].norm() {
                best = i;
            }
        }
        best
    }

    pub fn peak_coordinate(&self) -> f64 {
        self.coordinate(self.peak_index())
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm()).collect()
    }

    /// Central bins of a frequency signal on a smaller grid with the same `dω`.
    pub fn cropped(&self, target: &DualGrid) -> Result<Self> {
        self.expect_domain(Domain::Frequency)?;
        if !self.grid.same_dw(target) || target.n_samples() > self.len() {
            return Err(Error::GridMismatch(format!(
                "cannot crop N = {} (dw = {}) to N = {} (dw = {})",
                self.len(),
                self.grid.dw(),
                target.n_samples(),
                target.dw()
            )));
        }
        let start = self.grid.center() - target.center();
        let values = self.values[start..start + target.n_samples()].to_vec();
        Ok(Self::from_raw(*target, Domain::Frequency, values))
    }

    /// Zero-extends a frequency signal onto a wider grid with the same `dω`.
    pub fn embedded(&self, target: &DualGrid) -> Result<Self> {
        self.expect_domain(Domain::Frequency)?;
        if !self.grid.same_dw(target) || target.n_samples() < self.len() {
            return Err(Error::GridMismatch(format!(
                "cannot embed N = {} (dw = {}) into N = {} (dw = {})",
                self.len(),
                self.grid.dw(),
                target.n_samples(),
                target.dw()
            )));
        }
        let mut out = Self::zeros(*target, Domain::Frequency);
        let start = target.center() - self.grid.center();
        out.values[start..start + self.len()].copy_from_slice(&self.values);
        Ok(out)
    }

    /// Interpolates a frequency signal onto a grid `factor` times finer in `dω`
    /// by zero-padding its time-domain representation. Original bins are kept.
    pub fn refined(&self, factor: usize) -> Result<Self> {
        self.expect_domain(Domain::Frequency)?;
        let fine = self.grid.refined(factor)?;
        let time = inverse_ft(self)?;
        let mut padded = vec![Complex64::new(0.0, 0.0); fine.n_samples()];
        let start = fine.center() - self.grid.center();
        padded[start..start + self.len()].copy_from_slice(time.values());
        forward_ft(&Self::from_raw(fine, Domain::Time, padded))
    }

    pub fn ensure_finite(self, context: &str) -> Result<Self> {
        if self.values.iter().all(|v| v.re.is_finite() && v.im.is_finite()) {
            Ok(self)
        } else {
            Err(Error::NonFinite(context.to_string()))
        }
    }
}

/// `‖a - b‖ / ‖b‖` for equal-length slices.
pub fn relative_l2(a: &[Complex64], b: &[Complex64]) -> f64 {
    let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum();
    let den: f64 = b.iter().map(|y| y.norm_sqr()).sum();
    (num / den).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn rejects_wrong_length_and_nan() {
        let g = DualGrid::new(8, 1.0).unwrap();
        assert!(SpectralSignal::new(g, Domain::Time, vec![c(0.0); 7]).is_err());
        let mut v = vec![c(0.0); 8];
        v[3] = c(f64::NAN);
        assert!(matches!(
            SpectralSignal::new(g, Domain::Time, v),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let g = DualGrid::new(8, 1.0).unwrap();
        let a = SpectralSignal::zeros(g, Domain::Time);
        let b = SpectralSignal::zeros(g, Domain::Frequency);
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn crop_and_embed_round_trip() {
        let g = DualGrid::new(16, 1.0).unwrap();
        let wide = g.oversampled(4).unwrap();
        let s = SpectralSignal::from_fn(g, Domain::Frequency, |w| c(w)).unwrap();
        let e = s.embedded(&wide).unwrap();
        assert_eq!(e.at_offset(5), s.at_offset(5));
        assert_eq!(e.at_offset(20).unwrap(), c(0.0));
        assert_eq!(e.cropped(&g).unwrap(), s);
    }

    #[test]
    fn refinement_keeps_original_bins() {
        let g = DualGrid::new(64, 0.25).unwrap();
        let s = SpectralSignal::from_fn(g, Domain::Frequency, |w| {
            Complex64::new((-w * w / 4.0).exp(), 0.3 * w * (-w * w / 4.0).exp())
        })
        .unwrap();
        let r = s.refined(4).unwrap();
        for m in -32..32 {
            let d = (r.at_offset(4 * m).unwrap() - s.at_offset(m).unwrap()).norm();
            assert!(d < 1e-12, "bin {m}: {d}");
        }
    }
}
