//! First-order response to a single resonant tone: the absorption line sits
//! at `ω_i + ω_d` and its height grows linearly with the window `T`.

use dyson_rft::first_order::first_order_amplitude;
use dyson_rft::potential::PotentialModel;
use dyson_rft::spectral::DualGrid;
use dyson_rft::transition::TransitionSpec;

fn main() -> dyson_rft::Result<()> {
    let grid = DualGrid::new(1024, 0.1)?;
    let omega_d = 160.0 * grid.dw();
    let drive = PotentialModel::resonant_drive(omega_d).with_strength(1.0);

    println!("{:>8} {:>12} {:>12} {:>12}", "T", "peak at", "|c1| peak", "|c1| / T");
    for copies in [16, 8, 4, 2] {
        let spec = TransitionSpec::cyclotron(&grid, copies);
        let c1 = first_order_amplitude(&spec, &drive, &grid)?;
        let m = c1.peak_index();
        let peak = c1.values()[m].norm();
        println!(
            "{:>8.3} {:>12.5} {:>12.5} {:>12.5}",
            spec.window,
            c1.coordinate(m),
            peak,
            peak / spec.window
        );
    }
    println!("expected line at ω_i + ω_d = {omega_d:.5}");
    Ok(())
}
