//! Brute-force time-domain quadrature of the first two Dyson terms.
//!
//! Nothing here touches the Fourier machinery: the potential is evaluated
//! pointwise and the window integrals are plain weighted sums.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::potential::PotentialModel;
use crate::spectral::{Domain, DualGrid, SpectralSignal};
use crate::transition::{TransitionSpec, HBAR};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureRule {
    Midpoint,
    Trapezoid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureConfig {
    pub steps_outer: usize,
    pub steps_inner: usize,
    pub rule: QuadratureRule,
}

impl QuadratureConfig {
    pub const MIN_STEPS: usize = 64;

    pub fn midpoint(steps: usize) -> Self {
        Self {
            steps_outer: steps,
            steps_inner: steps,
            rule: QuadratureRule::Midpoint,
        }
    }

    pub fn trapezoid(steps: usize) -> Self {
        Self {
            rule: QuadratureRule::Trapezoid,
            ..Self::midpoint(steps)
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, s) in [("steps_outer", self.steps_outer), ("steps_inner", self.steps_inner)] {
            if s < Self::MIN_STEPS {
                return Err(Error::param(name, format!("needs at least {} steps, got {s}", Self::MIN_STEPS)));
            }
        }
        Ok(())
    }

    /// Nodes and weights for `∫_a^b` with `steps` panels.
    pub fn nodes(&self, a: f64, b: f64, steps: usize) -> Vec<(f64, f64)> {
        let h = (b - a) / steps as f64;
        match self.rule {
            QuadratureRule::Midpoint => (0..steps).map(|s| (a + (s as f64 + 0.5) * h, h)).collect(),
            QuadratureRule::Trapezoid => (0..=steps)
                .map(|s| {
                    let w = if s == 0 || s == steps { 0.5 * h } else { h };
                    (a + s as f64 * h, w)
                })
                .collect(),
        }
    }
}

/// `(V_fi A / iħ) ∫_r^{r+T} V(t) e^{i(ω - ω_i)t} dt` for every grid frequency.
pub fn direct_first_order(
    spec: &TransitionSpec,
    model: &PotentialModel,
    grid: &DualGrid,
    quad: &QuadratureConfig,
) -> Result<SpectralSignal> {
    quad.validate()?;
    spec.validate(grid)?;
    let r = spec.offset;
    let nodes: Vec<(f64, Complex64)> = quad
        .nodes(r, r + spec.window, quad.steps_outer)
        .into_iter()
        .map(|(t, w)| (t, model.value_at(t) * w))
        .collect();
    let w_i = spec.omega_i();
    let prefactor = spec.v_fi * spec.amplitude / Complex64::new(0.0, HBAR);
    let values: Vec<Complex64> = (0..grid.n_samples())
        .into_par_iter()
        .map(|m| {
            let x = grid.freq(m) - w_i;
            nodes
                .iter()
                .map(|&(t, v)| v * Complex64::from_polar(1.0, x * t))
                .sum::<Complex64>()
                * prefactor
        })
        .collect();
    SpectralSignal::new(*grid, Domain::Frequency, values)
}

/// `∫_a^b f(t₁) ∫_a^{t₁} g(t₂) dt₂ dt₁` with a fresh inner rule per outer node.
pub fn nested_integral(
    f: impl Fn(f64) -> Complex64,
    g: impl Fn(f64) -> Complex64,
    a: f64,
    b: f64,
    quad: &QuadratureConfig,
) -> Complex64 {
    quad.nodes(a, b, quad.steps_outer)
        .into_iter()
        .map(|(t1, w1)| {
            let inner: Complex64 = quad
                .nodes(a, t1, quad.steps_inner)
                .into_iter()
                .map(|(t2, w2)| g(t2) * w2)
                .sum();
            f(t1) * inner * w1
        })
        .sum()
}

/// Second-order amplitude by nested quadrature over the triangle
/// `r ≤ t₂ ≤ t₁ ≤ r + T`, summed over `k` and divided by `k_max`:
///
/// `(A V_fk V_ki / (iħ)²) (1/k_max) Σ_k ∫dt₁ V(t₁) e^{i(ω-ω_k)t₁} ∫dt₂ V(t₂) e^{i(ω_k-ω_i)t₂}`.
pub fn direct_second_order(
    spec: &TransitionSpec,
    model: &PotentialModel,
    grid: &DualGrid,
    quad: &QuadratureConfig,
) -> Result<SpectralSignal> {
    quad.validate()?;
    spec.validate_second_order(grid)?;
    let r = spec.offset;
    let w_i = spec.omega_i();
    let ks: Vec<i64> = spec.k_range().collect();
    let outer = quad.nodes(r, r + spec.window, quad.steps_outer);

    // inner[node][k] = ∫_r^{t₁} V(t₂) e^{i(ω_k - ω_i)t₂} dt₂
    let inner: Vec<Vec<Complex64>> = outer
        .par_iter()
        .map(|&(t1, _)| {
            let mut acc = vec![Complex64::new(0.0, 0.0); ks.len()];
            for (t2, w2) in quad.nodes(r, t1, quad.steps_inner) {
                let v = model.value_at(t2) * w2;
                for (a, &k) in acc.iter_mut().zip(&ks) {
                    *a += v * Complex64::from_polar(1.0, (spec.omega_k(k) - w_i) * t2);
                }
            }
            acc
        })
        .collect();

    // w₁ V(t₁) Σ_k e^{-iω_k t₁} inner_k(t₁)
    let weighted: Vec<(f64, Complex64)> = outer
        .iter()
        .zip(&inner)
        .map(|(&(t1, w1), row)| {
            let sum: Complex64 = ks
                .iter()
                .zip(row)
                .map(|(&k, a)| a * Complex64::from_polar(1.0, -spec.omega_k(k) * t1))
                .sum();
            (t1, model.value_at(t1) * w1 * sum)
        })
        .collect();

    let ih = Complex64::new(0.0, HBAR);
    let prefactor = spec.amplitude * spec.v_fk_v_ki / (ih * ih) / spec.k_max as f64;
    let values: Vec<Complex64> = (0..grid.n_samples())
        .into_par_iter()
        .map(|m| {
            let w = grid.freq(m);
            let mut acc = Complex64::new(0.0, 0.0);
            for &(t1, c) in &weighted {
                acc += c * Complex64::from_polar(1.0, w * t1);
            }
            acc * prefactor
        })
        .collect();
    SpectralSignal::new(*grid, Domain::Frequency, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn too_few_steps_is_rejected() {
        assert!(QuadratureConfig::midpoint(32).validate().is_err());
        assert!(QuadratureConfig::midpoint(64).validate().is_ok());
    }

    #[test]
    fn rules_integrate_polynomials() {
        let q = QuadratureConfig::trapezoid(64);
        let s: f64 = q.nodes(0.0, 2.0, 64).iter().map(|(t, w)| t * w).sum();
        assert!((s - 2.0).abs() < 1e-13);
        let q = QuadratureConfig::midpoint(64);
        let s: f64 = q.nodes(-1.0, 3.0, 64).iter().map(|(_, w)| w).sum();
        assert!((s - 4.0).abs() < 1e-13);
    }

    #[test]
    fn nested_integral_of_constants_is_half_square() {
        let q = QuadratureConfig::midpoint(64);
        let one = |_: f64| Complex64::new(1.0, 0.0);
        let v = nested_integral(one, one, 0.0, 3.0, &q);
        assert!((v - Complex64::new(4.5, 0.0)).norm() < 1e-12);
    }
}
