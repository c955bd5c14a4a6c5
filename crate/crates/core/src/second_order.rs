//! Second-order amplitude through per-path impulse responses.
//!
//! For each intermediate level `k` the inner time integral
//! `ψ_k(Δ) = ∫_r^{r+Δ} V(t) e^{iω_ki t} dt` is traced over one window,
//! repeated across the grid's time span and transformed into `Ψ̃_k`. The
//! amplitude is then
//!
//! `c⁽²⁾ = (A V_fk V_ki / (2πiħ)²) (1/k_max) S ∗ Σ_k Ṽ ∗ δ(ω - ω_k) ∗ Ψ̃_k`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::first_order::{unnormalized_spectrum, unnormalized_spikes};
use crate::potential::PotentialModel;
use crate::spectral::{
    convolve, convolve_kernel, forward_ft, shift_add, DeltaSpike, Domain, DualGrid, SpectralSignal,
    WindowSpectrum,
};
use crate::transition::{KEqualsIMode, TransitionSpec, HBAR};

/// `ψ_k` sampled at `Δ = j dt` for one window (`T / dt` samples).
#[derive(Debug, Clone, PartialEq)]
pub struct ImpulseResponseTrace {
    pub k: i64,
    pub dt: f64,
    pub offset: f64,
    pub values: Vec<Complex64>,
}

impl ImpulseResponseTrace {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Elapsed time since the window opened, per sample.
    pub fn elapsed(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |j| j as f64 * self.dt)
    }

    /// The trace repeated over the time axis of `grid`, starting at `t = 0`.
    pub fn tiled(&self, grid: &DualGrid) -> Result<SpectralSignal> {
        let n = grid.n_samples();
        let l = self.len();
        if l == 0 || n % l != 0 || (grid.dt() - self.dt).abs() > 1e-12 * self.dt {
            return Err(Error::Padding {
                window: l as f64 * self.dt,
                span: grid.t_total(),
            });
        }
        let h = grid.center();
        let values = (0..n)
            .map(|i| self.values[(i + n - h) % l])
            .collect();
        SpectralSignal::new(*grid, Domain::Time, values)
    }
}

/// `Ψ̃_k(ω) = ∫ ψ_k^{tiled}(t) e^{iωt} dt` (unnormalized convention).
#[derive(Debug, Clone, PartialEq)]
pub struct TransferFunction {
    pub k: i64,
    pub values: SpectralSignal,
    /// Set when the spectrum is a single impulse at the origin.
    pub delta_like: bool,
}

impl TransferFunction {
    /// Integrated weight of the bin `m` steps from the center.
    pub fn spike_weight(&self, m: i64) -> Option<Complex64> {
        self.values.at_offset(m).map(|v| v * self.values.grid().dw())
    }
}

/// Samples the inner integral of path `k` on the time step of `grid`.
pub fn impulse_response(
    spec: &TransitionSpec,
    model: &PotentialModel,
    grid: &DualGrid,
    k: i64,
) -> Result<ImpulseResponseTrace> {
    spec.validate(grid)?;
    model.validate(grid)?;
    let p = spec.pad_factor(grid)?;
    let len = grid.n_samples() / p;
    let w_ki = spec.omega_k(k) - spec.omega_i();
    let r = spec.offset;
    let inner = |delta: f64, x: f64| {
        WindowSpectrum {
            width: delta,
            offset: r,
        }
        .eval(x)
    };

    let values = if let Some(spikes) = unnormalized_spikes(model) {
        (0..len)
            .map(|j| {
                let delta = j as f64 * grid.dt();
                spikes
                    .iter()
                    .map(|s| s.weight * inner(delta, w_ki - s.center))
                    .sum::<Complex64>()
                    / TAU
            })
            .collect()
    } else {
        let v = unnormalized_spectrum(model, grid)?;
        let support: Vec<(f64, Complex64)> = v
            .values()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm_sqr() > 0.0)
            .map(|(i, c)| (grid.freq(i), *c))
            .collect();
        let scale = grid.dw() / TAU;
        (0..len)
            .map(|j| {
                let delta = j as f64 * grid.dt();
                support
                    .iter()
                    .map(|&(w, c)| c * inner(delta, w_ki - w))
                    .sum::<Complex64>()
                    * scale
            })
            .collect()
    };
    Ok(ImpulseResponseTrace {
        k,
        dt: grid.dt(),
        offset: r,
        values,
    })
}

/// Transforms a periodically extended trace into `Ψ̃_k` on `grid`.
///
/// With `KEqualsIMode::Paper` the `k = i` path is replaced by `2π δ(ω)`.
pub fn transfer_function(
    trace: &ImpulseResponseTrace,
    spec: &TransitionSpec,
    grid: &DualGrid,
) -> Result<TransferFunction> {
    spec.validate(grid)?;
    let p = spec.pad_factor(grid)?;
    if trace.len() * p != grid.n_samples() {
        return Err(Error::Padding {
            window: trace.len() as f64 * trace.dt,
            span: grid.t_total(),
        });
    }
    if spec.k_eq_i_mode == KEqualsIMode::Paper && spec.is_initial(trace.k, grid) {
        let values = DeltaSpike::new(0.0, Complex64::new(TAU, 0.0)).render(grid)?;
        return Ok(TransferFunction {
            k: trace.k,
            values,
            delta_like: true,
        });
    }
    let r = trace.offset;
    let values = forward_ft(&trace.tiled(grid)?)?
        .map(|w, v| v * Complex64::from_polar(TAU.sqrt(), w * r));
    Ok(TransferFunction {
        k: trace.k,
        values,
        delta_like: false,
    })
}

/// `Σ_k Ψ̃_k` over `-k_range ..= k_range` on `grid`, without the level shifts.
pub fn summed_transfer_profile(
    spec: &TransitionSpec,
    model: &PotentialModel,
    grid: &DualGrid,
    k_range: usize,
) -> Result<SpectralSignal> {
    let k = k_range as i64;
    let terms = (-k..=k)
        .into_par_iter()
        .map(|k| {
            let trace = impulse_response(spec, model, grid, k)?;
            Ok(transfer_function(&trace, spec, grid)?.values)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = SpectralSignal::zeros(*grid, Domain::Frequency);
    for t in &terms {
        total.accumulate(t);
    }
    Ok(total)
}

/// Second-order amplitude before the `1/k_max` normalization.
pub fn second_order_unnormalized(
    spec: &TransitionSpec,
    model: &PotentialModel,
    grid: &DualGrid,
) -> Result<SpectralSignal> {
    spec.validate_second_order(grid)?;
    model.validate(grid)?;
    let work = grid.oversampled(spec.numerics.working_oversample)?;
    let spikes = unnormalized_spikes(model);
    let v = match spikes {
        Some(_) => None,
        None => Some(unnormalized_spectrum(model, &work)?),
    };

    let ks: Vec<i64> = spec.k_range().collect();
    let terms = ks
        .par_iter()
        .map(|&k| {
            let trace = impulse_response(spec, model, &work, k)?;
            let tf = transfer_function(&trace, spec, &work)?;
            let w_k = spec.omega_k(k);
            let shifted = if tf.delta_like {
                None
            } else {
                Some(DeltaSpike::unit(w_k).apply_to(&tf.values)?)
            };
            // Ṽ ∗ δ(ω - ω_k) ∗ Ψ̃_k, short-circuiting every impulse.
            let mut term = SpectralSignal::zeros(work, Domain::Frequency);
            match (&spikes, &v, &shifted) {
                (Some(sp), _, Some(sh)) => {
                    for s in sp {
                        shift_add(&mut term, sh, s.offset(&work)?, s.weight);
                    }
                }
                (Some(sp), _, None) => {
                    let w = tf.spike_weight(0).unwrap_or_default();
                    for s in sp {
                        let m = work.bin_offset(s.center + w_k, "spike position")?;
                        if let Some(idx) = work.index_of_offset(m) {
                            term.values_mut()[idx] += s.weight * w / work.dw();
                        }
                    }
                }
                (None, Some(v), Some(sh)) => term = convolve(v, sh)?,
                (None, Some(v), None) => {
                    let w = tf.spike_weight(0).unwrap_or_default();
                    shift_add(&mut term, v, work.bin_offset(w_k, "omega_k")?, w);
                }
                (None, None, _) => unreachable!("spectrum is computed when there are no spikes"),
            }
            Ok(term)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut total = SpectralSignal::zeros(work, Domain::Frequency);
    for t in &terms {
        total.accumulate(t);
    }
    let window = spec.window_spectrum()?;
    let out = convolve_kernel(&total, grid, |w| window.eval(w))?;
    let denom = Complex64::new(0.0, TAU * HBAR);
    out.scaled(spec.amplitude * spec.v_fk_v_ki / (denom * denom))
        .ensure_finite("second_order_amplitude")
}

/// Second-order transition amplitude, normalized by `k_max`.
pub fn second_order_amplitude(
    spec: &TransitionSpec,
    model: &PotentialModel,
    grid: &DualGrid,
) -> Result<SpectralSignal> {
    let raw = second_order_unnormalized(spec, model, grid)?;
    Ok(raw.scaled(Complex64::new(1.0 / spec.k_max as f64, 0.0)))
}

/// Closed form for a single tone `V = e^{-iω_d t}` starting from `ω_i`:
///
/// `(A V_fk V_ki/(iħ)²)(1/k_max) Σ_k [S(ω-ω_i-2ω_d) - e^{iΔ_k r} S(ω-ω_k-ω_d)] / (iΔ_k)`
/// with `Δ_k = ω_k - ω_i - ω_d`.
fn single_tone_second_order(
    spec: &TransitionSpec,
    omega_d: f64,
    grid: &DualGrid,
) -> Result<SpectralSignal> {
    spec.validate_second_order(grid)?;
    let window = spec.window_spectrum()?;
    let w_i = spec.omega_i();
    let r = spec.offset;
    let mut paths = Vec::new();
    for k in spec.k_range() {
        let delta = spec.omega_k(k) - w_i - omega_d;
        if delta.abs() < 0.5 * grid.dw() {
            if spec.skip_poles {
                continue;
            }
            return Err(Error::ResonantPole { k });
        }
        paths.push((spec.omega_k(k), delta));
    }
    let ih = Complex64::new(0.0, HBAR);
    let prefactor = spec.amplitude * spec.v_fk_v_ki / (ih * ih) / spec.k_max as f64;
    SpectralSignal::from_fn(*grid, Domain::Frequency, |w| {
        let direct = window.eval(w - w_i - 2.0 * omega_d);
        paths
            .iter()
            .map(|&(w_k, delta)| {
                let back = Complex64::from_polar(1.0, delta * r) * window.eval(w - w_k - omega_d);
                (direct - back) / Complex64::new(0.0, delta)
            })
            .sum::<Complex64>()
            * prefactor
    })
}

/// Second-order golden rule for a weak harmonic drive `e^{-iω_d t}`: the
/// two-photon line at `ω_i + 2ω_d` plus one line per intermediate level.
pub fn second_order_golden_rule(spec: &TransitionSpec, omega_d: f64, grid: &DualGrid) -> Result<SpectralSignal> {
    grid.bin_offset(omega_d, "omega_d")?;
    single_tone_second_order(spec, omega_d, grid)
}

/// Second-order tunnelling amplitude under a constant bias: the constant
/// potential with the initial level raised by `bias`.
pub fn bardeen_second_order(spec: &TransitionSpec, bias: f64, grid: &DualGrid) -> Result<SpectralSignal> {
    let spec = spec.clone().with_initial_shift(spec.initial_shift + bias);
    single_tone_second_order(&spec, 0.0, grid)
}
