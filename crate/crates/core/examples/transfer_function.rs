//! Impulse responses and transfer functions of the second-order inner
//! integral for a flat potential. Each path `k ≠ i` becomes two spikes of
//! weight `±2πi/ω_ki`, at `-ω_ki` and at the origin.

use dyson_rft::potential::PotentialModel;
use dyson_rft::second_order::{impulse_response, summed_transfer_profile, transfer_function};
use dyson_rft::spectral::DualGrid;
use dyson_rft::transition::{KEqualsIMode, TransitionSpec};

fn main() -> dyson_rft::Result<()> {
    let grid = DualGrid::new(512, 0.1)?;
    let spec = TransitionSpec::cyclotron(&grid, 8).with_k_max(5).with_mode(KEqualsIMode::Paper);
    let flat = PotentialModel::constant_bias().with_strength(1.0);

    println!("{:>3} {:>24} {:>24}", "k", "weight at -ω_ki", "weight at 0");
    for k in spec.k_range() {
        let trace = impulse_response(&spec, &flat, &grid, k)?;
        let psi = transfer_function(&trace, &spec, &grid)?;
        let m = grid.bin_offset(-spec.omega_k(k) + spec.omega_i(), "-w_ki")?;
        let at = |m| psi.spike_weight(m).unwrap();
        if m == 0 {
            println!("{k:>3} {:>24} {:>24.6}", "-", at(0));
        } else {
            println!("{k:>3} {:>24.6} {:>24.6}", at(m), at(0));
        }
    }

    let profile = summed_transfer_profile(&spec, &flat, &grid, 25)?;
    println!("\nsummed profile, |Im| spike weight times |k| (flat means 1/|k| decay):");
    for k in [1i64, 2, 5, 10, 25] {
        let m = grid.bin_offset(k as f64 * spec.omega0, "k w0")?;
        let w = profile.at_offset(m).unwrap().im.abs() * grid.dw();
        println!("  k = {k:>2}: {:.6}", w * k as f64);
    }
    Ok(())
}
