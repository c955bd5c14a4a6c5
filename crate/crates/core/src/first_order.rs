//! First-order amplitude `c⁽¹⁾(ω) = (V_fi A / 2πiħ) (S ∗ Ṽ ∗ δ(ω - ω_i))`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::Result;
use crate::potential::PotentialModel;
use crate::spectral::{convolve_kernel, DeltaSpike, Domain, DualGrid, SpectralSignal};
use crate::transition::{TransitionSpec, HBAR};

/// `Ṽ` in the unnormalized convention `∫ V(t) e^{iωt} dt`.
pub(crate) fn unnormalized_spectrum(model: &PotentialModel, grid: &DualGrid) -> Result<SpectralSignal> {
    Ok(model.spectrum(grid)?.scaled(Complex64::new(TAU.sqrt(), 0.0)))
}

/// Spikes of `Ṽ` in the unnormalized convention, if the spectrum is discrete.
pub(crate) fn unnormalized_spikes(model: &PotentialModel) -> Option<Vec<DeltaSpike>> {
    model.spectral_spikes().map(|spikes| {
        spikes
            .into_iter()
            .map(|s| DeltaSpike::new(s.center, s.weight * TAU.sqrt()))
            .collect()
    })
}

/// Transition amplitude to first order on the frequency axis of `grid`.
///
/// The window spectrum `S` is applied in closed form at every frequency
/// difference, so the result is the exact window integral of the band-limited
/// potential. The potential spectrum is evaluated over a support
/// `spectral_support` times wider than the grid from its formula, or
/// `sampled_support` times wider from finer time samples, before cropping back.
pub fn first_order_amplitude(
    spec: &TransitionSpec,
    model: &PotentialModel,
    grid: &DualGrid,
) -> Result<SpectralSignal> {
    spec.validate(grid)?;
    model.validate(grid)?;
    let window = spec.window_spectrum()?;
    let w_i = spec.omega_i();
    let prefactor = spec.v_fi * spec.amplitude / Complex64::new(0.0, TAU * HBAR);

    let out = if let Some(spikes) = unnormalized_spikes(model) {
        SpectralSignal::from_fn(*grid, Domain::Frequency, |w| {
            spikes
                .iter()
                .map(|s| s.weight * window.eval(w - w_i - s.center))
                .sum::<Complex64>()
        })?
    } else {
        let support = if model.has_closed_form_spectrum() {
            spec.numerics.spectral_support
        } else {
            spec.numerics.sampled_support
        };
        let work = grid.oversampled(support)?;
        let v = unnormalized_spectrum(model, &work)?;
        let shifted = DeltaSpike::unit(w_i).apply_to(&v)?;
        convolve_kernel(&shifted, grid, |w| window.eval(w))?
    };
    out.scaled(prefactor).ensure_finite("first_order_amplitude")
}

/// Long-window envelope for a Gaussian kick of width `τ` centered in the
/// window: `|c⁽¹⁾| → √(2π) |V_fi A V₀| τ e^{-(ω-ω_i)²τ²/2} / ħ`.
pub fn gaussian_kick_asymptotic(
    spec: &TransitionSpec,
    model: &PotentialModel,
    tau: f64,
    grid: &DualGrid,
) -> Result<SpectralSignal> {
    let scale = TAU.sqrt() * (spec.v_fi * spec.amplitude).norm() * model.strength().abs() / HBAR;
    let w_i = spec.omega_i();
    SpectralSignal::from_fn(*grid, Domain::Frequency, |w| {
        let x = (w - w_i) * tau;
        Complex64::new(scale * tau * (-0.5 * x * x).exp(), 0.0)
    })
}

/// First-order tunnelling amplitude under a constant bias: the constant
/// potential with the initial level raised by `bias`.
pub fn bardeen_first_order(spec: &TransitionSpec, bias: f64, grid: &DualGrid) -> Result<SpectralSignal> {
    let spec = spec.clone().with_initial_shift(spec.initial_shift + bias);
    first_order_amplitude(&spec, &PotentialModel::constant_bias().with_strength(1.0), grid)
}
