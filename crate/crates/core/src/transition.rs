//! Level lattice, observation window and couplings shared by both orders.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::{DualGrid, WindowSpectrum};

/// Units are chosen so that `ħ = 1`.
pub const HBAR: f64 = 1.0;

/// Treatment of the `k = i` intermediate path, where `1/ω_ki` is singular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KEqualsIMode {
    /// Replace the transfer function by `2π δ(ω)`.
    Paper,
    /// Transform the actual impulse response of that path.
    Literal,
}

/// How the cyclotron condition reads the fundamental frequency of the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FundamentalConvention {
    /// `ω₀ = 2π / T`
    Angular,
    /// `ω₀ = 1 / T`
    Inverse,
}

/// Sampling refinements used internally by the amplitude pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Numerics {
    /// First order: a closed-form potential spectrum is evaluated over this
    /// many times the grid's frequency span before the window convolution.
    pub spectral_support: usize,
    /// As `spectral_support`, for spectra transformed from time samples.
    /// These alias, so they get a wider span.
    pub sampled_support: usize,
    /// Second order: impulse responses are traced on a time grid this many
    /// times finer than the caller's grid, with the same `dω`.
    pub working_oversample: usize,
}

impl Default for Numerics {
    fn default() -> Self {
        Self {
            spectral_support: 64,
            sampled_support: 256,
            working_oversample: 4,
        }
    }
}

/// Transition parameters. Levels sit on `ω_k = k ω₀`; the initial level is
/// `ω_i = i ω₀ + initial_shift`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionSpec {
    pub omega0: f64,
    pub i_index: i64,
    pub initial_shift: f64,
    pub window: f64,
    pub offset: f64,
    pub k_max: usize,
    pub v_fi: Complex64,
    pub v_fk_v_ki: Complex64,
    pub amplitude: Complex64,
    pub k_eq_i_mode: KEqualsIMode,
    pub cyclotron: bool,
    pub fundamental: FundamentalConvention,
    pub skip_poles: bool,
    pub numerics: Numerics,
}

impl TransitionSpec {
    pub fn new(omega0: f64, window: f64) -> Self {
        let one = Complex64::new(1.0, 0.0);
        Self {
            omega0,
            i_index: 0,
            initial_shift: 0.0,
            window,
            offset: 0.0,
            k_max: 4,
            v_fi: one,
            v_fk_v_ki: one,
            amplitude: one,
            k_eq_i_mode: KEqualsIMode::Paper,
            cyclotron: false,
            fundamental: FundamentalConvention::Angular,
            skip_poles: false,
            numerics: Numerics::default(),
        }
    }

    /// Window `T = t_total / copies` with level spacing `ω₀ = 2π / T`.
    pub fn cyclotron(grid: &DualGrid, copies: usize) -> Self {
        let window = grid.t_total() / copies as f64;
        let mut spec = Self::new(copies as f64 * grid.dw(), window);
        spec.cyclotron = true;
        spec
    }

    pub fn with_k_max(mut self, k_max: usize) -> Self {
        self.k_max = k_max;
        self
    }

    pub fn with_initial(mut self, i_index: i64) -> Self {
        self.i_index = i_index;
        self
    }

    pub fn with_initial_shift(mut self, shift: f64) -> Self {
        self.initial_shift = shift;
        self
    }

    pub fn with_offset(mut self, offset: f64) -> Self {
        self.offset = offset;
        self
    }

    pub fn with_mode(mut self, mode: KEqualsIMode) -> Self {
        self.k_eq_i_mode = mode;
        self
    }

    pub fn with_numerics(mut self, numerics: Numerics) -> Self {
        self.numerics = numerics;
        self
    }

    pub fn with_skip_poles(mut self, skip: bool) -> Self {
        self.skip_poles = skip;
        self
    }

    pub fn omega_i(&self) -> f64 {
        self.i_index as f64 * self.omega0 + self.initial_shift
    }

    pub fn omega_k(&self, k: i64) -> f64 {
        k as f64 * self.omega0
    }

    /// Intermediate indices `-k_max ..= k_max`.
    pub fn k_range(&self) -> impl Iterator<Item = i64> {
        let k = self.k_max as i64;
        -k..=k
    }

    pub fn fundamental_frequency(&self) -> f64 {
        match self.fundamental {
            FundamentalConvention::Angular => TAU / self.window,
            FundamentalConvention::Inverse => 1.0 / self.window,
        }
    }

    pub fn window_spectrum(&self) -> Result<WindowSpectrum> {
        WindowSpectrum::new(self.window, self.offset)
    }

    /// Whether level `k` coincides with the initial level.
    pub fn is_initial(&self, k: i64, grid: &DualGrid) -> bool {
        (self.omega_k(k) - self.omega_i()).abs() < 0.5 * grid.dw()
    }

    /// Number of window copies in the grid's time span.
    pub fn pad_factor(&self, grid: &DualGrid) -> Result<usize> {
        let p = grid.copies_of(self.window)?;
        if grid.n_samples() % p != 0 {
            return Err(Error::Padding {
                window: self.window,
                span: grid.t_total(),
            });
        }
        Ok(p)
    }

    /// Validates the window and the levels against `grid`.
    pub fn validate(&self, grid: &DualGrid) -> Result<()> {
        if !(self.omega0.is_finite() && self.omega0 > 0.0) {
            return Err(Error::param("omega0", format!("must be positive, got {}", self.omega0)));
        }
        if grid.bin_offset(self.omega0, "omega0")? < 1 {
            return Err(Error::param("omega0", "must be at least one frequency bin"));
        }
        if !self.offset.is_finite() {
            return Err(Error::param("offset", "must be finite"));
        }
        self.pad_factor(grid)?;
        grid.bin_offset(self.initial_shift, "initial_shift")?;
        grid.freq_index(self.omega_i(), "omega_i")?;
        if self.cyclotron {
            let f = self.fundamental_frequency();
            grid.bin_offset(f, "fundamental frequency")?;
            if (f - self.omega0).abs() > 1e-9 * self.omega0 {
                return Err(Error::param(
                    "omega0",
                    format!("cyclotron configuration needs omega0 = {f}, got {}", self.omega0),
                ));
            }
        }
        for (name, c) in [
            ("v_fi", self.v_fi),
            ("v_fk_v_ki", self.v_fk_v_ki),
            ("amplitude", self.amplitude),
        ] {
            if !(c.re.is_finite() && c.im.is_finite()) {
                return Err(Error::param(name, "must be finite"));
            }
        }
        for (name, v) in [
            ("spectral_support", self.numerics.spectral_support),
            ("sampled_support", self.numerics.sampled_support),
            ("working_oversample", self.numerics.working_oversample),
        ] {
            if v == 0 || !v.is_power_of_two() {
                return Err(Error::param(name, format!("must be a power of two, got {v}")));
            }
        }
        Ok(())
    }

    /// Validation plus the lattice checks needed by the second order.
    pub fn validate_second_order(&self, grid: &DualGrid) -> Result<()> {
        self.validate(grid)?;
        if self.k_max == 0 {
            return Err(Error::param("k_max", "must be at least 1"));
        }
        for k in self.k_range() {
            grid.freq_index(self.omega_k(k), "omega_k")?;
            grid.freq_index(self.omega_k(k) - self.omega_i(), "omega_k - omega_i")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotron_spec_validates() {
        let g = DualGrid::new(1024, 1.0).unwrap();
        let s = TransitionSpec::cyclotron(&g, 16).with_k_max(10);
        s.validate_second_order(&g).unwrap();
        assert!((s.fundamental_frequency() - s.omega0).abs() < 1e-12);
    }

    #[test]
    fn window_must_divide_span() {
        let g = DualGrid::new(1024, 1.0).unwrap();
        let s = TransitionSpec::new(16.0 * g.dw(), 100.0);
        assert!(matches!(s.validate(&g), Err(Error::Padding { .. })));
    }

    #[test]
    fn inverse_convention_cannot_be_cyclotron_aligned() {
        let g = DualGrid::new(1024, 1.0).unwrap();
        let mut s = TransitionSpec::cyclotron(&g, 16);
        s.fundamental = FundamentalConvention::Inverse;
        assert!(s.validate(&g).is_err());
    }

    #[test]
    fn levels_must_fit_on_grid() {
        let g = DualGrid::new(128, 1.0).unwrap();
        let s = TransitionSpec::cyclotron(&g, 16).with_k_max(5);
        assert!(s.validate_second_order(&g).is_err());
        let s = s.with_k_max(3);
        assert!(s.validate_second_order(&g).is_ok());
    }
}
