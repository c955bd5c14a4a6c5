//! With the window matched to the level spacing, the first-order response of
//! a flat potential is a sinc whose zeros land on every other level. Sampling
//! on the level lattice picks out the initial level alone, and sinc
//! interpolation of those samples rebuilds the whole curve.

use dyson_rft::first_order::first_order_amplitude;
use dyson_rft::potential::PotentialModel;
use dyson_rft::spectral::{sinc, DualGrid};
use dyson_rft::transition::TransitionSpec;

fn main() -> dyson_rft::Result<()> {
    let grid = DualGrid::new(1024, 0.1)?;
    let spec = TransitionSpec::cyclotron(&grid, 16).with_initial(1);
    let flat = PotentialModel::constant_bias().with_strength(1.0);
    let c1 = first_order_amplitude(&spec, &flat, &grid)?;
    let c_i = c1.at_frequency(spec.omega_i())?;

    for k in -3..=5 {
        let v = c1.at_frequency(spec.omega_k(k))? / c_i;
        println!("k = {k:>2}: {:.3e}", v.norm());
    }

    // Rebuild |c1| between lattice points from the single nonzero sample.
    let t = spec.window;
    let worst = (0..grid.n_samples())
        .map(|m| {
            let x = (grid.freq(m) - spec.omega_i()) * t / 2.0;
            (c1.values()[m].norm() - c_i.norm() * sinc(x).abs()).abs()
        })
        .fold(0.0, f64::max);
    println!("max |c1| reconstruction error: {worst:.2e}");
    Ok(())
}
