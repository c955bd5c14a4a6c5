//! Regenerates the committed regression fixture: direct quadrature of the
//! first-order amplitude of a Gaussian kick, stored bit-exactly.
//!
//! `cargo run --example oracle_fixture -- crates/core/tests/fixtures/first_order_gaussian.rftfix`

use dyson_rft::fixture::Fixture;
use dyson_rft::oracle::{direct_first_order, QuadratureConfig};
use dyson_rft::potential::PotentialModel;
use dyson_rft::spectral::DualGrid;
use dyson_rft::transition::TransitionSpec;

/// Canonical description of the fixture configuration, hashed into its header.
pub const DESCRIPTION: &str =
    "first_order oracle; grid n=256 dt=0.1; copies=4 offset=-3.2; gaussian_kick tau=0.8 center=0 strength=0.1; midpoint 4096";

fn main() -> dyson_rft::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "crates/core/tests/fixtures/first_order_gaussian.rftfix".into());
    let grid = DualGrid::new(256, 0.1)?;
    let spec = TransitionSpec::cyclotron(&grid, 4).with_offset(-3.2);
    let kick = PotentialModel::gaussian_kick_at(0.8, 0.0);
    let oracle = direct_first_order(&spec, &kick, &grid, &QuadratureConfig::midpoint(4096))?;
    let fixture = Fixture::from_signal(&oracle, "first_order_gaussian", DESCRIPTION);
    fixture.save(std::path::Path::new(&path))?;
    println!("wrote {path} ({} samples, spec_hash {})", fixture.values.len(), fixture.header["spec_hash"]);
    Ok(())
}
