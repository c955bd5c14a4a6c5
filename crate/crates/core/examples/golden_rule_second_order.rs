//! Two-photon absorption: the single-tone closed form peaks at
//! `ω_i + 2ω_d`, and the full pipeline driven by an adiabatically switched
//! oscillator reproduces it.

use dyson_rft::potential::{PotentialModel, RampProfile};
use dyson_rft::second_order::{second_order_amplitude, second_order_golden_rule};
use dyson_rft::spectral::DualGrid;
use dyson_rft::transition::{KEqualsIMode, TransitionSpec};

fn main() -> dyson_rft::Result<()> {
    let grid = DualGrid::new(1024, 1.0)?;
    let spec = TransitionSpec::cyclotron(&grid, 16).with_k_max(4).with_mode(KEqualsIMode::Literal);
    let omega_d = 10.0 * spec.omega0;

    let closed = second_order_golden_rule(&spec, omega_d, &grid)?;
    println!(
        "closed form peaks at {:.3} ω₀ (2 ω_d = {:.1} ω₀)",
        closed.peak_coordinate() / spec.omega0,
        2.0 * omega_d / spec.omega0
    );

    for eps_bins in [1.0, 2.0, 4.0] {
        let ramp = PotentialModel::ramped_oscillator(eps_bins * grid.dw(), omega_d, RampProfile::OneSided)
            .with_strength(1.0);
        let pipe = second_order_amplitude(&spec, &ramp, &grid)?;
        println!("ε = {eps_bins} dω: pipeline vs closed form {:.2e}", pipe.relative_l2(&closed)?);
    }
    Ok(())
}
