//! Joint spectral amplitude of a four-wave-mixing photon pair, by nested
//! spectral convolution, direct `z, t` quadrature and the fiber-limit
//! closed form.

use std::time::Instant;

use dyson_rft::jsa::{jsa_direct, jsa_reference, jsa_rft, FwmConfig};
use dyson_rft::oracle::QuadratureConfig;

fn main() -> dyson_rft::Result<()> {
    let cfg = FwmConfig::example();
    println!("pump dispersion negligible: {}", cfg.fiber_approximation_valid());

    let t0 = Instant::now();
    let rft = jsa_rft(&cfg)?;
    let t_rft = t0.elapsed();
    let t0 = Instant::now();
    let direct = jsa_direct(&cfg, &QuadratureConfig::midpoint(256))?;
    let t_direct = t0.elapsed();
    let reference = jsa_reference(&cfg)?;

    println!("convolution vs quadrature: {:.2e} ({t_rft:?} vs {t_direct:?})", rft.relative_l2(&direct)?);
    println!("convolution vs closed form: {:.2e}", rft.relative_l2(&reference)?);
    println!("energy ridge at ω_s + ω_i = {:.1}", rft.ridge_sum_frequency());
    println!("exchange asymmetry: {:.1e}", rft.swap_asymmetry());

    // Coarse |F| picture.
    let n = rft.signal.len();
    for s in (0..n).step_by(4) {
        let row: String = (0..n)
            .step_by(2)
            .map(|i| match rft.get(s, i).norm() {
                v if v > 0.5 => '#',
                v if v > 0.1 => '+',
                v if v > 0.01 => '.',
                _ => ' ',
            })
            .collect();
        println!("{:>6.1} |{row}|", rft.signal[s]);
    }
    Ok(())
}
