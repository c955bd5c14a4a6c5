//! TOML-described runs: which amplitudes to compute on which grid, and
//! where to write them.
//!
//! ```toml
//! name = "example"
//! tasks = ["first_order", "oracle_first", "compare"]
//!
//! [grid]
//! n_samples = 512
//! dt = 0.05
//!
//! [transition]
//! copies = 4          # T = t_total / 4
//!
//! [potential]
//! kind = "gaussian_kick"
//! tau = 0.4
//!
//! [[compare]]
//! a = "first_order"
//! b = "oracle_first"
//! ```

mod bundled;
mod config;
mod run;
mod table;

pub use bundled::{bundled_text, list_bundled, BUNDLED};
pub use config::{
    BiasSection, ComparePair, DriveSection, GridSection, JsaSection, OracleSection, PotentialSection,
    ScenarioConfig, Task, TransferDumpSection, TransitionSection,
};
pub use run::{compare_files, run_scenario, RunSummary, VERSION};
pub use table::{complex_table, signal_table, ComparisonReport, Table};

use std::path::Path;

use crate::error::Result;

/// Loads a scenario from a path, or from the bundled set if no such file
/// exists. Returns the parsed config and its source text.
pub fn resolve(path_or_name: &str) -> Result<(ScenarioConfig, String)> {
    let path = Path::new(path_or_name);
    if !path.exists() {
        if let Some(text) = bundled_text(path_or_name) {
            return Ok((ScenarioConfig::from_toml(text, Path::new("."))?, text.to_string()));
        }
    }
    ScenarioConfig::load(path)
}
