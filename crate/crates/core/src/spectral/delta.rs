use num_complex::Complex64;

use super::grid::DualGrid;
use super::signal::{Domain, SpectralSignal};
use crate::error::Result;

/// Weighted Dirac impulse `w δ(ω - c)` in the frequency domain.
///
/// On a grid it occupies a single bin with value `w / dω`, so that
/// `Σ value · dω = w` and convolution with it is an exact shift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaSpike {
    pub center: f64,
    pub weight: Complex64,
}

impl DeltaSpike {
    pub fn new(center: f64, weight: Complex64) -> Self {
        Self { center, weight }
    }

    pub fn unit(center: f64) -> Self {
        Self::new(center, Complex64::new(1.0, 0.0))
    }

    /// Copy of the spike moved to the nearest grid bin.
    pub fn snapped(&self, grid: &DualGrid) -> Self {
        Self::new(grid.nearest_bin_offset(self.center) as f64 * grid.dw(), self.weight)
    }

    /// Bin offset of the spike; errors if the center is off-grid.
    pub fn offset(&self, grid: &DualGrid) -> Result<i64> {
        grid.bin_offset(self.center, "spike center")
    }

    pub fn render(&self, grid: &DualGrid) -> Result<SpectralSignal> {
        let idx = grid.freq_index(self.center, "spike center")?;
        let mut values = vec![Complex64::new(0.0, 0.0); grid.n_samples()];
        values[idx] = self.weight / grid.dw();
        Ok(SpectralSignal::from_raw(*grid, Domain::Frequency, values))
    }

    /// `self ∗ signal`: the signal shifted by the spike center and scaled by
    /// its weight. Bins pushed off the grid are dropped, vacated bins are zero.
    pub fn apply_to(&self, signal: &SpectralSignal) -> Result<SpectralSignal> {
        signal.expect_domain(Domain::Frequency)?;
        let shift = self.offset(signal.grid())?;
        let mut out = SpectralSignal::zeros(*signal.grid(), Domain::Frequency);
        shift_add(&mut out, signal, shift, self.weight);
        Ok(out)
    }
}

/// `out[m] += weight · src[m - shift]` over the overlapping range.
pub(crate) fn shift_add(out: &mut SpectralSignal, src: &SpectralSignal, shift: i64, weight: Complex64) {
    let n = src.len() as i64;
    let lo = shift.max(0);
    let hi = (n + shift).min(n);
    if lo >= hi {
        return;
    }
    let dst = &mut out.values_mut()[lo as usize..hi as usize];
    let s = &src.values()[(lo - shift) as usize..(hi - shift) as usize];
    for (d, v) in dst.iter_mut().zip(s) {
        *d += v * weight;
    }
}

/// `unit_delta(c)` rendered on `grid`.
pub fn unit_delta(grid: &DualGrid, center: f64) -> Result<SpectralSignal> {
    DeltaSpike::unit(center).render(grid)
}
