//! Perturbing potentials `V(t)` with their time samples and spectra.

use std::f64::consts::TAU;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::{forward_ft, DeltaSpike, Domain, DualGrid, SpectralSignal};

/// Coupling used when a potential is built without an explicit strength.
pub const DEFAULT_STRENGTH: f64 = 0.1;

/// How a ramped oscillator switches on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RampProfile {
    /// `e^{ε min(t,0)}`: grows in from the past and holds at 1 for `t > 0`.
    OneSided,
    /// `e^{-ε|t|}`: symmetric decay whose spectrum is a Lorentzian.
    TwoSided,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PotentialKind {
    /// `e^{-(t-c)²/(2τ²)}`
    GaussianKick { tau: f64, center: f64 },
    /// `2 cos(ω_d t)`, or only the `e^{-iω_d t}` half when `resonant_only`.
    HarmonicDrive { omega_d: f64, resonant_only: bool },
    /// Ramp envelope times `e^{-iω_d t}`.
    RampedOscillator { epsilon: f64, omega_d: f64, profile: RampProfile },
    /// `1` for all time.
    ConstantBias,
    /// Samples on the time axis of `grid`, band-limited between nodes.
    Tabulated { grid: DualGrid, samples: Vec<Complex64> },
}

/// A potential kind scaled by a coupling strength.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialModel {
    kind: PotentialKind,
    strength: f64,
}

impl PotentialModel {
    pub fn new(kind: PotentialKind) -> Self {
        Self {
            kind,
            strength: DEFAULT_STRENGTH,
        }
    }

    pub fn gaussian_kick(tau: f64) -> Self {
        Self::new(PotentialKind::GaussianKick { tau, center: 0.0 })
    }

    pub fn gaussian_kick_at(tau: f64, center: f64) -> Self {
        Self::new(PotentialKind::GaussianKick { tau, center })
    }

    pub fn harmonic_drive(omega_d: f64) -> Self {
        Self::new(PotentialKind::HarmonicDrive {
            omega_d,
            resonant_only: false,
        })
    }

    pub fn resonant_drive(omega_d: f64) -> Self {
        Self::new(PotentialKind::HarmonicDrive {
            omega_d,
            resonant_only: true,
        })
    }

    pub fn ramped_oscillator(epsilon: f64, omega_d: f64, profile: RampProfile) -> Self {
        Self::new(PotentialKind::RampedOscillator {
            epsilon,
            omega_d,
            profile,
        })
    }

    pub fn constant_bias() -> Self {
        Self::new(PotentialKind::ConstantBias)
    }

    pub fn tabulated(grid: DualGrid, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.n_samples() {
            return Err(Error::GridMismatch(format!(
                "tabulated potential has {} samples, grid has {}",
                samples.len(),
                grid.n_samples()
            )));
        }
        if samples.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::NonFinite("tabulated potential samples".into()));
        }
        Ok(Self::new(PotentialKind::Tabulated { grid, samples }))
    }

    /// Reads `t re,im` lines (blank lines and `#` comments ignored). The
    /// times must reproduce the time axis of `grid`.
    pub fn tabulated_from_str(text: &str, grid: DualGrid) -> Result<Self> {
        let mut samples = Vec::with_capacity(grid.n_samples());
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |what: &str| Error::Parse(format!("line {}: {what}: `{raw}`", lineno + 1));
            let mut parts = line.split_whitespace();
            let t: f64 = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("bad time"))?;
            let value = parts.next().ok_or_else(|| bad("missing value"))?;
            let (re, im) = value.split_once(',').ok_or_else(|| bad("value must be `re,im`"))?;
            let re: f64 = re.trim().parse().map_err(|_| bad("bad real part"))?;
            let im: f64 = im.trim().parse().map_err(|_| bad("bad imaginary part"))?;
            let n = samples.len();
            if n >= grid.n_samples() {
                return Err(Error::GridMismatch(format!(
                    "tabulated potential has more than {} samples",
                    grid.n_samples()
                )));
            }
            let expect = grid.time(n);
            if (t - expect).abs() > 1e-6 * grid.dt() {
                return Err(Error::GridMismatch(format!(
                    "sample {n} at t = {t}, grid expects t = {expect}"
                )));
            }
            samples.push(Complex64::new(re, im));
        }
        Self::tabulated(grid, samples)
    }

    pub fn tabulated_from_file(path: &Path, grid: DualGrid) -> Result<Self> {
        Self::tabulated_from_str(&std::fs::read_to_string(path)?, grid)
    }

    pub fn with_strength(mut self, strength: f64) -> Self {
        self.strength = strength;
        self
    }

    pub fn kind(&self) -> &PotentialKind {
        &self.kind
    }

    pub fn strength(&self) -> f64 {
        self.strength
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            PotentialKind::GaussianKick { .. } => "gaussian_kick",
            PotentialKind::HarmonicDrive { .. } => "harmonic_drive",
            PotentialKind::RampedOscillator { .. } => "ramped_oscillator",
            PotentialKind::ConstantBias => "constant_bias",
            PotentialKind::Tabulated { .. } => "tabulated",
        }
    }

    /// Checks parameters and, for spike spectra, that every spike is on `grid`.
    pub fn validate(&self, grid: &DualGrid) -> Result<()> {
        if !self.strength.is_finite() {
            return Err(Error::param("strength", "must be finite"));
        }
        match &self.kind {
            PotentialKind::GaussianKick { tau, center } => {
                if !(tau.is_finite() && *tau > 0.0) {
                    return Err(Error::param("tau", format!("must be positive, got {tau}")));
                }
                if !center.is_finite() {
                    return Err(Error::param("center", "must be finite"));
                }
            }
            PotentialKind::HarmonicDrive { omega_d, .. } => {
                grid.freq_index(*omega_d, "omega_d")?;
                grid.freq_index(-*omega_d, "-omega_d")?;
            }
            PotentialKind::RampedOscillator { epsilon, omega_d, .. } => {
                if !(epsilon.is_finite() && *epsilon > 0.0) {
                    return Err(Error::param("epsilon", format!("must be positive, got {epsilon}")));
                }
                if !omega_d.is_finite() {
                    return Err(Error::param("omega_d", "must be finite"));
                }
            }
            PotentialKind::ConstantBias => {}
            PotentialKind::Tabulated { grid: own, .. } => {
                if !own.same_dw(grid) || grid.n_samples() < own.n_samples() {
                    return Err(Error::GridMismatch(
                        "tabulated potential used on a grid with a different frequency step".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// `V(t)` at an arbitrary time.
    pub fn value_at(&self, t: f64) -> Complex64 {
        let v = match &self.kind {
            PotentialKind::GaussianKick { tau, center } => {
                let x = (t - center) / tau;
                Complex64::new((-0.5 * x * x).exp(), 0.0)
            }
            PotentialKind::HarmonicDrive { omega_d, resonant_only } => {
                if *resonant_only {
                    Complex64::from_polar(1.0, -omega_d * t)
                } else {
                    Complex64::new(2.0 * (omega_d * t).cos(), 0.0)
                }
            }
            PotentialKind::RampedOscillator { epsilon, omega_d, profile } => {
                let envelope = match profile {
                    RampProfile::OneSided => (epsilon * t.min(0.0)).exp(),
                    RampProfile::TwoSided => (-epsilon * t.abs()).exp(),
                };
                Complex64::from_polar(envelope, -omega_d * t)
            }
            PotentialKind::ConstantBias => Complex64::new(1.0, 0.0),
            PotentialKind::Tabulated { grid, samples } => band_limited_value(grid, samples, t),
        };
        v * self.strength
    }

    /// `V(t_n)` on the time axis of `grid`.
    pub fn sample_time(&self, grid: &DualGrid) -> Result<SpectralSignal> {
        self.validate(grid)?;
        if let PotentialKind::Tabulated { grid: own, samples } = &self.kind {
            if own.matches(grid) {
                let values = samples.iter().map(|v| v * self.strength).collect();
                return SpectralSignal::new(*grid, Domain::Time, values);
            }
        }
        SpectralSignal::from_fn(*grid, Domain::Time, |t| self.value_at(t))
    }

    /// Spectral impulses when the spectrum is a sum of deltas, in the
    /// symmetric convention of [`forward_ft`].
    pub fn spectral_spikes(&self) -> Option<Vec<DeltaSpike>> {
        let w = Complex64::new(TAU.sqrt() * self.strength, 0.0);
        match self.kind {
            PotentialKind::ConstantBias => Some(vec![DeltaSpike::new(0.0, w)]),
            PotentialKind::HarmonicDrive { omega_d, resonant_only } => {
                if resonant_only {
                    Some(vec![DeltaSpike::new(omega_d, w)])
                } else {
                    Some(vec![DeltaSpike::new(omega_d, w), DeltaSpike::new(-omega_d, w)])
                }
            }
            _ => None,
        }
    }

    pub fn has_spike_spectrum(&self) -> bool {
        self.spectral_spikes().is_some()
    }

    /// Whether [`spectrum`](Self::spectrum) is evaluated from a formula
    /// rather than a transform of samples.
    pub fn has_closed_form_spectrum(&self) -> bool {
        matches!(
            self.kind,
            PotentialKind::GaussianKick { .. }
                | PotentialKind::HarmonicDrive { .. }
                | PotentialKind::ConstantBias
                | PotentialKind::RampedOscillator {
                    profile: RampProfile::TwoSided,
                    ..
                }
        )
    }

    /// `Ṽ(ω)` in the symmetric convention, `(1/√(2π)) ∫ V(t) e^{iωt} dt`.
    ///
    /// Spikes are rendered as single bins; kinds without a formula are
    /// transformed from their time samples. A tabulated potential can be
    /// evaluated on any grid sharing its `dω` and at least as wide.
    pub fn spectrum(&self, grid: &DualGrid) -> Result<SpectralSignal> {
        self.validate(grid)?;
        if let Some(spikes) = self.spectral_spikes() {
            let mut out = SpectralSignal::zeros(*grid, Domain::Frequency);
            for s in spikes {
                let idx = grid.freq_index(s.center, "spike center")?;
                out.values_mut()[idx] += s.weight / grid.dw();
            }
            return Ok(out);
        }
        let a = self.strength;
        match &self.kind {
            PotentialKind::GaussianKick { tau, center } => {
                SpectralSignal::from_fn(*grid, Domain::Frequency, |w| {
                    Complex64::from_polar(a * tau * (-0.5 * w * w * tau * tau).exp(), w * center)
                })
            }
            PotentialKind::RampedOscillator {
                epsilon,
                omega_d,
                profile: RampProfile::TwoSided,
            } => SpectralSignal::from_fn(*grid, Domain::Frequency, |w| {
                let x = w - omega_d;
                Complex64::new(a * 2.0 * epsilon / ((x * x + epsilon * epsilon) * TAU.sqrt()), 0.0)
            }),
            PotentialKind::Tabulated { grid: own, .. } => {
                let base = forward_ft(&self.sample_time(own)?)?;
                if own.matches(grid) {
                    Ok(base)
                } else {
                    base.embedded(grid)
                }
            }
            _ => forward_ft(&self.sample_time(grid)?),
        }
    }
}

/// Trigonometric interpolant through the samples, matching the band that
/// [`forward_ft`] resolves on `grid`.
fn band_limited_value(grid: &DualGrid, samples: &[Complex64], t: f64) -> Complex64 {
    let n = grid.n_samples() as f64;
    let dw = grid.dw();
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, v) in samples.iter().enumerate() {
        let x = dw * (t - grid.time(i));
        let half = 0.5 * x;
        let s = half.sin();
        let ratio = if s.abs() < 1e-12 {
            n * (n * half).cos() / half.cos()
        } else {
            (n * half).sin() / s
        };
        acc += v * Complex64::from_polar(ratio, half);
    }
    acc / n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabulated_interpolant_reproduces_nodes() {
        let g = DualGrid::new(32, 0.5).unwrap();
        let samples: Vec<Complex64> = g
            .times()
            .map(|t| Complex64::new((-t * t / 8.0).exp(), 0.1 * t))
            .collect();
        let m = PotentialModel::tabulated(g, samples.clone()).unwrap().with_strength(1.0);
        for (i, s) in samples.iter().enumerate() {
            assert!((m.value_at(g.time(i)) - s).norm() < 1e-12);
        }
    }

    #[test]
    fn tabulated_interpolant_is_exact_for_resolved_tones() {
        let g = DualGrid::new(64, 1.0).unwrap();
        let w = 5.0 * g.dw();
        let tone = |t: f64| Complex64::from_polar(1.0, -w * t);
        let m = PotentialModel::tabulated(g, g.times().map(tone).collect())
            .unwrap()
            .with_strength(1.0);
        for &t in &[0.3, -7.25, 11.9] {
            assert!((m.value_at(t) - tone(t)).norm() < 1e-12);
        }
    }

    #[test]
    fn parses_tabulated_text() {
        let g = DualGrid::new(8, 1.0).unwrap();
        let mut text = String::from("# t re,im\n");
        for t in g.times() {
            text.push_str(&format!("{t} {},{}\n", t * 0.5, -t));
        }
        let m = PotentialModel::tabulated_from_str(&text, g).unwrap();
        assert_eq!(m.name(), "tabulated");
        let bad = text.replace("-4 ", "-3.5 ");
        assert!(matches!(
            PotentialModel::tabulated_from_str(&bad, g),
            Err(Error::GridMismatch(_))
        ));
        let short: String = text.lines().take(5).map(|l| format!("{l}\n")).collect();
        assert!(PotentialModel::tabulated_from_str(&short, g).is_err());
    }

    #[test]
    fn harmonic_drive_must_be_on_grid() {
        let g = DualGrid::new(64, 1.0).unwrap();
        assert!(PotentialModel::harmonic_drive(2.5 * g.dw()).spectrum(&g).is_err());
        assert!(PotentialModel::harmonic_drive(3.0 * g.dw()).spectrum(&g).is_ok());
    }

    #[test]
    fn spike_spectrum_weights() {
        let g = DualGrid::new(64, 1.0).unwrap();
        let s = PotentialModel::constant_bias().with_strength(1.0).spectrum(&g).unwrap();
        assert!((s.at_offset(0).unwrap() * g.dw() - Complex64::new(TAU.sqrt(), 0.0)).norm() < 1e-14);
        let h = PotentialModel::harmonic_drive(4.0 * g.dw()).with_strength(1.0).spectrum(&g).unwrap();
        for m in [4, -4] {
            assert!((h.at_offset(m).unwrap() * g.dw() - Complex64::new(TAU.sqrt(), 0.0)).norm() < 1e-14);
        }
    }
}
