//! Scenario files shipped with the crate, runnable by name.

use std::path::Path;

use super::config::ScenarioConfig;
use crate::error::Result;

pub const BUNDLED: &[(&str, &str)] = &[
    ("golden_rule_1", include_str!("../../scenarios/golden_rule_1.toml")),
    ("gaussian_kick", include_str!("../../scenarios/gaussian_kick.toml")),
    ("fig_ordercompare", include_str!("../../scenarios/fig_ordercompare.toml")),
    ("second_order_oracle", include_str!("../../scenarios/second_order_oracle.toml")),
    ("ramped_drive", include_str!("../../scenarios/ramped_drive.toml")),
    ("bardeen", include_str!("../../scenarios/bardeen.toml")),
    ("transfer_functions", include_str!("../../scenarios/transfer_functions.toml")),
    ("jsa_fiber", include_str!("../../scenarios/jsa_fiber.toml")),
];

pub fn bundled_text(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Name and one-line description of every bundled scenario.
pub fn list_bundled() -> Result<Vec<(String, String)>> {
    BUNDLED
        .iter()
        .map(|(_, text)| {
            let cfg = ScenarioConfig::from_toml(text, Path::new("."))?;
            Ok((cfg.name, cfg.description))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_scenario_parses_and_names_itself() {
        for (name, text) in BUNDLED {
            let cfg = ScenarioConfig::from_toml(text, Path::new(".")).unwrap();
            assert_eq!(&cfg.name, name);
            cfg.grid().unwrap();
        }
    }
}
