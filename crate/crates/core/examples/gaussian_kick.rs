//! A Gaussian kick seen through a finite window. Subtracting the
//! long-window envelope leaves a ripple from the truncated tails.

use std::f64::consts::TAU;

use dyson_rft::analysis::{mean_spacing, rising_zero_crossings};
use dyson_rft::first_order::{first_order_amplitude, gaussian_kick_asymptotic};
use dyson_rft::oracle::{direct_first_order, QuadratureConfig};
use dyson_rft::potential::PotentialModel;
use dyson_rft::spectral::DualGrid;
use dyson_rft::transition::TransitionSpec;
use dyson_rft::Complex64;

fn main() -> dyson_rft::Result<()> {
    let grid = DualGrid::new(1024, 0.05)?;
    let spec = TransitionSpec::cyclotron(&grid, 4);
    let t = spec.window;
    let spec = spec.with_offset(-t / 2.0);
    let tau = t / 8.0;
    let kick = PotentialModel::gaussian_kick_at(tau, 0.0);

    let c1 = first_order_amplitude(&spec, &kick, &grid)?;
    let oracle = direct_first_order(&spec, &kick, &grid, &QuadratureConfig::midpoint(4096))?;
    println!("relative L2 against direct quadrature: {:.2e}", c1.relative_l2(&oracle)?);

    let env = gaussian_kick_asymptotic(&spec, &kick, tau, &grid)?;
    let pre = Complex64::new(0.0, -kick.strength());
    let w: Vec<f64> = grid.freqs().collect();
    // Real amplitude about the window center, minus the envelope.
    let ripple: Vec<f64> = w
        .iter()
        .zip(c1.values().iter().zip(env.values()))
        .map(|(&w, (c, e))| (c / pre * Complex64::from_polar(1.0, -w * (spec.offset + t / 2.0))).re - e.re)
        .collect();
    let spacing = mean_spacing(&rising_zero_crossings(&w, &ripple)).unwrap();
    println!("ripple period {spacing:.4}, 4π/T = {:.4}", 2.0 * TAU / t);

    let h = grid.center();
    for m in (h - 24..=h + 24).step_by(4) {
        println!("{:>9.4} {:>12.4e} {:>12.4e}", w[m], c1.values()[m].norm(), env.values()[m].re);
    }
    Ok(())
}
