//! Second-order amplitude from the spectral pipeline against nested
//! quadrature of the time-ordered double integral, with timings.

use std::time::Instant;

use dyson_rft::oracle::{direct_second_order, QuadratureConfig};
use dyson_rft::potential::PotentialModel;
use dyson_rft::second_order::second_order_amplitude;
use dyson_rft::spectral::DualGrid;
use dyson_rft::transition::{KEqualsIMode, TransitionSpec};

fn main() -> dyson_rft::Result<()> {
    let grid = DualGrid::new(1024, 1.0)?;
    for k_max in [4, 10] {
        let spec = TransitionSpec::cyclotron(&grid, 16)
            .with_k_max(k_max)
            .with_mode(KEqualsIMode::Literal);
        let kick = PotentialModel::gaussian_kick(spec.window / 4.0);

        let t0 = Instant::now();
        let fast = second_order_amplitude(&spec, &kick, &grid)?;
        let t_fast = t0.elapsed();
        let t0 = Instant::now();
        let slow = direct_second_order(&spec, &kick, &grid, &QuadratureConfig::midpoint(2048))?;
        let t_slow = t0.elapsed();

        println!(
            "k_max = {k_max:>2}: relative L2 {:.2e}, pipeline {:?}, quadrature {:?}",
            fast.relative_l2(&slow)?,
            t_fast,
            t_slow
        );
    }
    Ok(())
}
