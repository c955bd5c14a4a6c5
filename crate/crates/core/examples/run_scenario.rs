//! Runs a bundled scenario through the library API, the same path the
//! `dyson-rft run` command takes.
//!
//! `cargo run --example run_scenario -- fig_ordercompare /tmp/out`

use std::path::PathBuf;

use dyson_rft::scenario::{list_bundled, resolve, run_scenario};

fn main() -> dyson_rft::Result<()> {
    let mut args = std::env::args().skip(1);
    let Some(name) = args.next() else {
        for (name, description) in list_bundled()? {
            println!("{name:<20} {description}");
        }
        return Ok(());
    };
    let out = args.next().map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join(&name));
    let (cfg, text) = resolve(&name)?;
    let summary = run_scenario(&cfg, &text, &out)?;
    for (file, hash) in &summary.outputs {
        println!("{file:<32} {}", &hash[..16]);
    }
    for report in &summary.reports {
        print!("{}", report.to_text(true));
    }
    Ok(())
}
