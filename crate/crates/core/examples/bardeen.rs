//! Tunnelling under a constant bias `eV₀`. First order is a sinc line at
//! `ω_i + eV₀` whose width scales as `1/T`; second-order contributions fall
//! off as `1/|ω_k - eV₀|`.

use dyson_rft::analysis::{fwhm, proportional_fit};
use dyson_rft::first_order::bardeen_first_order;
use dyson_rft::second_order::bardeen_second_order;
use dyson_rft::spectral::DualGrid;
use dyson_rft::transition::{KEqualsIMode, TransitionSpec};

fn main() -> dyson_rft::Result<()> {
    let grid = DualGrid::new(1024, 0.1)?;
    let bias = 64.0 * grid.dw();

    println!("{:>8} {:>10} {:>10} {:>10}", "T", "line at", "FWHM", "FWHM·T");
    for copies in [8, 4, 2] {
        let spec = TransitionSpec::cyclotron(&grid, copies);
        let c1 = bardeen_first_order(&spec, bias, &grid)?;
        let fine = c1.refined(16)?;
        let width = fwhm(&fine.coordinates(), &fine.magnitudes()).unwrap();
        println!(
            "{:>8.3} {:>10.4} {:>10.4} {:>10.4}",
            spec.window,
            c1.peak_coordinate(),
            width,
            width * spec.window
        );
    }

    let spec = TransitionSpec::cyclotron(&grid, 16).with_k_max(4).with_mode(KEqualsIMode::Literal);
    let bias = 8.0 * spec.omega0;
    let c2 = bardeen_second_order(&spec, bias, &grid)?;
    let (mut x, mut y) = (Vec::new(), Vec::new());
    for k in spec.k_range() {
        let w_k = spec.omega_k(k);
        x.push(1.0 / (w_k - spec.omega_i() - bias).abs());
        y.push(c2.at_frequency(w_k)?.norm());
    }
    let (c, r2) = proportional_fit(&x, &y);
    println!("second order at ω_k: |c2| = {c:.4e} / |ω_k - eV₀|, R² = {r2:.6}");
    Ok(())
}
