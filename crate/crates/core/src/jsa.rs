//! Joint spectral amplitude of spontaneous four-wave mixing in a fiber.
//!
//! The pump is a Gaussian pulse of spectral width `σ` centered on `Ω₀` and
//! peaking at `t = 0`; the detection window `[-T₀/2, T₀/2]` is centered on
//! it. The fiber occupies `z ∈ [-L₀, 0]`. All maps are normalized so that
//! the long-window, dispersion-free limit is the closed form
//! `e^{ibL/2} sinc(bL/2) e^{-(ω_s+ω_i-2Ω₀)²/(4σ²)}` with `b = Δk + 2γP`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::QuadratureConfig;
use crate::spectral::{convolve_kernel, relative_l2, Domain, DualGrid, SpectralSignal, WindowSpectrum};

#[derive(Debug, Clone, PartialEq)]
pub struct FwmConfig {
    /// Pump carrier `Ω₀`.
    pub pump_center: f64,
    /// Pump spectral width `σ`.
    pub pump_sigma: f64,
    /// Group-velocity dispersion `k''`.
    pub gvd: f64,
    /// Nonlinear phase rate `γP`.
    pub gamma_p: f64,
    /// Fiber length `L₀`.
    pub fiber_length: f64,
    /// Detection window `T₀`.
    pub interaction_time: f64,
    /// Signal and idler detunings from `Ω₀` (shared axis).
    pub axis: DualGrid,
    /// Sum-frequency detuning `ω_s + ω_i - 2Ω₀`; same `dω` as `axis`.
    pub sum_grid: DualGrid,
    /// Spatial grid whose span must hold a whole number of fiber lengths.
    pub z_grid: DualGrid,
    /// Keep the `k''` pump-dispersion term (dropped in the fiber limit).
    pub pump_dispersion: bool,
}

/// Complex map indexed `[signal][idler]`.
#[derive(Debug, Clone, PartialEq)]
pub struct JsaMap {
    pub signal: Vec<f64>,
    pub idler: Vec<f64>,
    pub values: Vec<Complex64>,
}

impl JsaMap {
    pub fn get(&self, s: usize, i: usize) -> Complex64 {
        self.values[s * self.idler.len() + i]
    }

    pub fn relative_l2(&self, reference: &JsaMap) -> Result<f64> {
        if self.values.len() != reference.values.len() {
            return Err(Error::GridMismatch("JSA maps of different shape".into()));
        }
        Ok(relative_l2(&self.values, &reference.values))
    }

    /// Sum frequency `ω_s + ω_i` carrying the most `|F|²`, summed along
    /// each anti-diagonal.
    pub fn ridge_sum_frequency(&self) -> f64 {
        let n = self.signal.len();
        let mut profile = vec![0.0; 2 * n - 1];
        for s in 0..n {
            for i in 0..n {
                profile[s + i] += self.get(s, i).norm_sqr();
            }
        }
        let q = crate::analysis::argmax(&profile);
        let (s, i) = if q < n { (q, 0) } else { (n - 1, q - (n - 1)) };
        self.signal[s] + self.idler[i]
    }

    /// Largest deviation from `F(ω_s, ω_i) = F(ω_i, ω_s)`.
    pub fn swap_asymmetry(&self) -> f64 {
        let n = self.signal.len();
        let mut worst: f64 = 0.0;
        for s in 0..n {
            for i in 0..n {
                worst = worst.max((self.get(s, i) - self.get(i, s)).norm());
            }
        }
        worst
    }
}

impl FwmConfig {
    /// A fiber-limit configuration on a 64 x 64 map with unit frequency step.
    pub fn example() -> Self {
        let axis = DualGrid::with_frequency_step(64, 1.0).expect("valid axis");
        let sum_grid = DualGrid::with_frequency_step(512, 1.0).expect("valid sum grid");
        Self {
            pump_center: 100.0,
            pump_sigma: 4.0,
            gvd: 1.25e-3,
            gamma_p: 0.5,
            fiber_length: 1.0,
            interaction_time: sum_grid.t_total() / 2.0,
            axis,
            sum_grid,
            z_grid: DualGrid::with_duration(256, 4.0).expect("valid z grid"),
            pump_dispersion: true,
        }
    }

    pub fn signal_frequencies(&self) -> Vec<f64> {
        self.axis.freqs().map(|w| self.pump_center + w).collect()
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("pump_sigma", self.pump_sigma),
            ("fiber_length", self.fiber_length),
            ("interaction_time", self.interaction_time),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::param(name, format!("must be positive, got {v}")));
            }
        }
        for (name, v) in [("pump_center", self.pump_center), ("gvd", self.gvd), ("gamma_p", self.gamma_p)] {
            if !v.is_finite() {
                return Err(Error::param(name, "must be finite"));
            }
        }
        if !self.axis.same_dw(&self.sum_grid) {
            return Err(Error::GridMismatch("signal axis and sum grid need the same dω".into()));
        }
        self.sum_grid.copies_of(self.interaction_time)?;
        self.z_grid.copies_of(self.fiber_length)?;
        let reach = self.axis.center() as i64 * 2;
        if self.sum_grid.index_of_offset(-reach).is_none() || self.sum_grid.index_of_offset(reach - 2).is_none() {
            return Err(Error::OutOfRange("sum grid too narrow for the signal/idler axis".into()));
        }
        Ok(())
    }

    /// `|k''| σ² L₀ < 1`: pump dispersion over the fiber is negligible.
    pub fn fiber_approximation_valid(&self) -> bool {
        self.gvd.abs() * self.pump_sigma.powi(2) * self.fiber_length < 1.0
    }

    fn fiber_window(&self, k: f64) -> Complex64 {
        // ∫_{-L}^{0} e^{-ikz} dz, the spatial sign convention.
        WindowSpectrum {
            width: self.fiber_length,
            offset: 0.0,
        }
        .eval(k)
    }

    fn pump_envelope(&self, w: f64) -> f64 {
        (-w * w / (4.0 * self.pump_sigma * self.pump_sigma)).exp()
    }

    fn map_from(&self, f: impl Fn(usize, usize) -> Complex64 + Sync) -> JsaMap {
        let n = self.axis.n_samples();
        let values = (0..n * n).into_par_iter().map(|q| f(q / n, q % n)).collect();
        JsaMap {
            signal: self.signal_frequencies(),
            idler: self.signal_frequencies(),
            values,
        }
    }

    fn sum_offset(&self, s: usize, i: usize) -> i64 {
        s as i64 + i as i64 - 2 * self.axis.center() as i64
    }

    fn mismatch_at(&self, s: usize, i: usize) -> f64 {
        wave_mismatch(self.axis.freq(s), self.axis.freq(i), self)
    }
}

/// `Δk = (k''/4)(ω_s - ω_i)²`.
pub fn wave_mismatch(omega_s: f64, omega_i: f64, cfg: &FwmConfig) -> f64 {
    let d = omega_s - omega_i;
    0.25 * cfg.gvd * d * d
}

/// Closed-form amplitude in the long-window fiber limit.
pub fn jsa_reference(cfg: &FwmConfig) -> Result<JsaMap> {
    cfg.validate()?;
    let dw = cfg.axis.dw();
    Ok(cfg.map_from(|s, i| {
        let b = cfg.mismatch_at(s, i) + 2.0 * cfg.gamma_p;
        let sum = cfg.sum_offset(s, i) as f64 * dw;
        cfg.fiber_window(b) / cfg.fiber_length * cfg.pump_envelope(sum)
    }))
}

/// Amplitude from nested spectral convolutions: the fiber window in `k`
/// shifted by `2γP` and by the pump-dispersion term, weighted by the pump
/// envelope, then convolved along the sum frequency with the detection
/// window `T₀ sinc(ωT₀/2)`.
pub fn jsa_rft(cfg: &FwmConfig) -> Result<JsaMap> {
    cfg.validate()?;
    let n = cfg.axis.n_samples() as i64;
    let window = WindowSpectrum::centered(cfg.interaction_time)?;
    let disp = if cfg.pump_dispersion { 0.25 * cfg.gvd } else { 0.0 };
    // One convolution per distinct |ω_s - ω_i|.
    let rows: Vec<SpectralSignal> = (0..n)
        .into_par_iter()
        .map(|d| {
            let delta_k = wave_mismatch(d as f64 * cfg.axis.dw(), 0.0, cfg);
            let g = SpectralSignal::from_fn(cfg.sum_grid, Domain::Frequency, |w| {
                let k = delta_k + 2.0 * cfg.gamma_p - disp * w * w;
                cfg.fiber_window(k) * (cfg.pump_envelope(w) / cfg.fiber_length)
            })?;
            Ok(convolve_kernel(&g, &cfg.sum_grid, |w| window.eval(w))?.scaled(Complex64::new(1.0 / TAU, 0.0)))
        })
        .collect::<Result<_>>()?;
    Ok(cfg.map_from(|s, i| {
        let d = (s as i64 - i as i64).unsigned_abs() as usize;
        rows[d].at_offset(cfg.sum_offset(s, i)).unwrap_or_default()
    }))
}

/// Amplitude by direct `z, t` quadrature with the squared pump field in
/// closed Gaussian form, `(2πσ²/a) e^{-σ²t²/a}` with `a = 1 - ik''σ²z`.
/// `steps_outer` sets the `z` rule and `steps_inner` the `t` rule.
pub fn jsa_direct(cfg: &FwmConfig, quad: &QuadratureConfig) -> Result<JsaMap> {
    cfg.validate()?;
    quad.validate()?;
    let sigma2 = cfg.pump_sigma * cfg.pump_sigma;
    let half = 0.5 * cfg.interaction_time;
    let z_nodes = quad.nodes(-cfg.fiber_length, 0.0, quad.steps_outer);
    let t_nodes = quad.nodes(-half, half, quad.steps_inner);
    let n = cfg.axis.n_samples() as i64;
    let dw = cfg.axis.dw();
    let c = if cfg.pump_dispersion { cfg.gvd * sigma2 } else { 0.0 };

    // time integral per (sum offset, z node)
    let sums: Vec<i64> = (-n..n - 1).collect();
    let time_part: Vec<Vec<Complex64>> = sums
        .par_iter()
        .map(|&q| {
            let w = q as f64 * dw;
            z_nodes
                .iter()
                .map(|&(z, _)| {
                    let a = Complex64::new(1.0, -c * z);
                    let amp = Complex64::new(TAU * sigma2, 0.0) / a;
                    t_nodes
                        .iter()
                        .map(|&(t, wt)| amp * (-sigma2 * t * t / a).exp() * Complex64::from_polar(wt, w * t))
                        .sum()
                })
                .collect()
        })
        .collect();

    let norm = cfg.fiber_length * 2.0 * PI.powf(1.5) * cfg.pump_sigma;
    Ok(cfg.map_from(|s, i| {
        let b = cfg.mismatch_at(s, i) + 2.0 * cfg.gamma_p;
        let row = &time_part[(cfg.sum_offset(s, i) + n) as usize];
        z_nodes
            .iter()
            .zip(row)
            .map(|(&(z, wz), tp)| tp * Complex64::from_polar(wz, -b * z))
            .sum::<Complex64>()
            / norm
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_is_symmetric_and_vanishes_on_diagonal() {
        let cfg = FwmConfig::example();
        assert_eq!(wave_mismatch(3.0, 3.0, &cfg), 0.0);
        assert_eq!(wave_mismatch(1.0, 4.0, &cfg), wave_mismatch(4.0, 1.0, &cfg));
    }

    #[test]
    fn window_must_divide_spans() {
        let mut cfg = FwmConfig::example();
        cfg.interaction_time *= 0.7;
        assert!(matches!(jsa_reference(&cfg), Err(Error::Padding { .. })));
        let mut cfg = FwmConfig::example();
        cfg.fiber_length = 3.0;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn example_is_in_the_fiber_limit() {
        assert!(FwmConfig::example().fiber_approximation_valid());
    }
}
