//! First against second order for a flat potential, each scaled to unit
//! norm. Second order drains the central peak into the side lobes.
//!
//! `cargo run --example order_compare -- out.tsv` also writes both curves.

use dyson_rft::first_order::first_order_amplitude;
use dyson_rft::potential::PotentialModel;
use dyson_rft::second_order::second_order_amplitude;
use dyson_rft::spectral::{DualGrid, SpectralSignal};
use dyson_rft::transition::{KEqualsIMode, TransitionSpec};
use dyson_rft::Complex64;

fn unit(s: SpectralSignal) -> SpectralSignal {
    s.scaled(Complex64::new(1.0 / s.norm_l2(), 0.0))
}

fn main() -> dyson_rft::Result<()> {
    let grid = DualGrid::new(2048, 1.0)?;
    let spec = TransitionSpec::cyclotron(&grid, 32).with_k_max(20).with_mode(KEqualsIMode::Paper);
    let flat = PotentialModel::constant_bias().with_strength(1.0);
    let c1 = unit(first_order_amplitude(&spec, &flat, &grid)?);
    let c2 = unit(second_order_amplitude(&spec, &flat, &grid)?);

    let w0 = spec.omega0;
    println!("{:>8} {:>12} {:>12}", "ω/ω₀", "|c1|", "|c2|");
    for k in -8i64..=8 {
        let w = k as f64 * w0 + 0.5 * w0;
        let (a, b) = (c1.at_frequency(w)?.norm(), c2.at_frequency(w)?.norm());
        println!("{:>8.1} {a:>12.4e} {b:>12.4e}", w / w0);
    }
    println!("center: |c1| = {:.4e}, |c2| = {:.4e}", c1.at_frequency(0.0)?.norm(), c2.at_frequency(0.0)?.norm());

    if let Some(path) = std::env::args().nth(1) {
        let mut out = String::from("omega\tabs1\tabs2\n");
        for m in 0..grid.n_samples() {
            out += &format!("{:.16e}\t{:.16e}\t{:.16e}\n", grid.freq(m), c1.values()[m].norm(), c2.values()[m].norm());
        }
        std::fs::write(&path, out)?;
        println!("wrote {path}");
    }
    Ok(())
}
