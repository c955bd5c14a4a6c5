use num_complex::Complex64;

use super::grid::DualGrid;
use super::signal::{Domain, SpectralSignal};
use crate::error::{Error, Result};

/// `sin(x)/x`, switching to a Taylor series near zero.
#[inline]
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Closed-form spectrum of the unit rectangle on `[r, r + T]`:
/// `S(ω) = ∫_r^{r+T} e^{iωt} dt = T e^{iωT/2} sinc(ωT/2) e^{iωr}`.
///
/// This is the unnormalized transform, `√(2π)` times what [`forward_ft`]
/// approximates for the sampled rectangle.
///
/// [`forward_ft`]: super::forward_ft
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowSpectrum {
    pub width: f64,
    pub offset: f64,
}

impl WindowSpectrum {
    pub fn new(width: f64, offset: f64) -> Result<Self> {
        if !(width.is_finite() && width > 0.0) {
            return Err(Error::param("window", format!("must be positive, got {width}")));
        }
        if !offset.is_finite() {
            return Err(Error::param("offset", "must be finite"));
        }
        Ok(Self { width, offset })
    }

    /// Window centered on `t = 0`, i.e. `[-T/2, T/2]`.
    pub fn centered(width: f64) -> Result<Self> {
        Self::new(width, -width / 2.0)
    }

    #[inline]
    pub fn eval(&self, w: f64) -> Complex64 {
        let half = 0.5 * w * self.width;
        Complex64::from_polar(self.width * sinc(half), half + w * self.offset)
    }

    pub fn render(&self, grid: &DualGrid) -> Result<SpectralSignal> {
        if self.width > grid.t_total() * (1.0 + 1e-12) {
            return Err(Error::param(
                "window",
                format!("{} exceeds the grid duration {}", self.width, grid.t_total()),
            ));
        }
        SpectralSignal::from_fn(*grid, Domain::Frequency, |w| self.eval(w))
    }
}

/// Renders `T e^{iωT/2} sinc(ωT/2) e^{iωr}` on the frequency axis of `grid`.
pub fn windowed_sinc_spectrum(width: f64, offset: f64, grid: &DualGrid) -> Result<SpectralSignal> {
    WindowSpectrum::new(width, offset)?.render(grid)
}
