use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_complex::Complex64;
use sha2::{Digest, Sha256};

use super::config::{ScenarioConfig, Task};
use super::table::{complex_table, matrix_table, signal_table, ComparisonReport, Table};
use crate::analysis::proportional_fit;
use crate::error::{Error, Result};
use crate::first_order::{bardeen_first_order, first_order_amplitude, gaussian_kick_asymptotic};
use crate::fixture::hex;
use crate::jsa::{jsa_direct, jsa_reference, jsa_rft, JsaMap};
use crate::oracle::{direct_first_order, direct_second_order};
use crate::potential::{PotentialKind, PotentialModel};
use crate::second_order::{
    bardeen_second_order, impulse_response, second_order_amplitude, second_order_golden_rule,
    summed_transfer_profile, transfer_function,
};
use crate::spectral::SpectralSignal;

pub const VERSION: &str = concat!("v", env!("CARGO_PKG_VERSION"));

/// What a run produced: file hashes, timings and comparison reports.
#[derive(Debug, Clone, Default)]
pub struct RunSummary {
    pub out_dir: PathBuf,
    /// Relative path to SHA-256.
    pub outputs: BTreeMap<String, String>,
    pub runtimes: Vec<(String, f64)>,
    pub reports: Vec<ComparisonReport>,
}

struct Runner<'a> {
    cfg: &'a ScenarioConfig,
    out: &'a Path,
    summary: RunSummary,
    tables: BTreeMap<String, Table>,
}

fn sha256(bytes: &[u8]) -> String {
    hex(&Sha256::digest(bytes))
}

impl Runner<'_> {
    fn write(&mut self, rel: &str, text: &str) -> Result<()> {
        let path = self.out.join(rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(&path, text)?;
        self.summary.outputs.insert(rel.to_string(), sha256(text.as_bytes()));
        Ok(())
    }

    fn write_signal(&mut self, name: &str, signal: &SpectralSignal) -> Result<()> {
        self.write(&format!("{name}.tsv"), &signal_table(signal)?)?;
        self.tables.insert(name.to_string(), Table::from_signal(signal));
        Ok(())
    }

    fn timed<T>(&mut self, name: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = f()?;
        self.summary.runtimes.push((name.to_string(), start.elapsed().as_secs_f64()));
        Ok(out)
    }

    fn task(&mut self, task: Task) -> Result<()> {
        let cfg = self.cfg;
        let grid = cfg.grid()?;
        let name = task.name();
        match task {
            Task::FirstOrder => {
                let (spec, model) = (cfg.transition()?, cfg.potential()?);
                let s = self.timed(name, || first_order_amplitude(&spec, &model, &grid))?;
                self.write_signal(name, &s)
            }
            Task::SecondOrder => {
                let (spec, model) = (cfg.transition()?, cfg.potential()?);
                let s = self.timed(name, || second_order_amplitude(&spec, &model, &grid))?;
                self.write_signal(name, &s)
            }
            Task::OracleFirst => {
                let (spec, model, quad) = (cfg.transition()?, cfg.potential()?, cfg.quadrature()?);
                let s = self.timed(name, || direct_first_order(&spec, &model, &grid, &quad))?;
                self.write_signal(name, &s)
            }
            Task::OracleSecond => {
                let (spec, model, quad) = (cfg.transition()?, cfg.potential()?, cfg.quadrature()?);
                let s = self.timed(name, || direct_second_order(&spec, &model, &grid, &quad))?;
                self.write_signal(name, &s)
            }
            Task::GoldenRule1 => {
                let spec = cfg.transition()?;
                let model = PotentialModel::resonant_drive(cfg.drive_frequency()?).with_strength(1.0);
                let s = self.timed(name, || first_order_amplitude(&spec, &model, &grid))?;
                self.write_signal(name, &s)
            }
            Task::GoldenRule2 => {
                let (spec, w_d) = (cfg.transition()?, cfg.drive_frequency()?);
                let s = self.timed(name, || second_order_golden_rule(&spec, w_d, &grid))?;
                self.write_signal(name, &s)
            }
            Task::GaussianAsymptotic => {
                let (spec, model) = (cfg.transition()?, cfg.potential()?);
                let PotentialKind::GaussianKick { tau, .. } = *model.kind() else {
                    return Err(Error::param("potential.kind", "gaussian_asymptotic needs a gaussian_kick"));
                };
                let s = self.timed(name, || gaussian_kick_asymptotic(&spec, &model, tau, &grid))?;
                self.write_signal(name, &s)
            }
            Task::Bardeen1 => {
                let (spec, bias) = (cfg.transition()?, cfg.bias_frequency()?);
                let s = self.timed(name, || bardeen_first_order(&spec, bias, &grid))?;
                self.write_signal(name, &s)
            }
            Task::Bardeen2 => {
                let (spec, bias) = (cfg.transition()?, cfg.bias_frequency()?);
                let s = self.timed(name, || bardeen_second_order(&spec, bias, &grid))?;
                self.write_signal(name, &s)
            }
            Task::Jsa => self.jsa(),
            Task::TransferDump => self.transfer_dump(),
            Task::OrderCompare => self.order_compare(),
            Task::Compare => self.compare(),
        }
    }

    fn write_jsa(&mut self, method: &str, map: &JsaMap) -> Result<()> {
        let n = map.signal.len();
        if map.values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::NonFinite(format!("jsa_{method}")));
        }
        for (part, f) in [
            ("re", (|v: Complex64| v.re) as fn(Complex64) -> f64),
            ("im", |v: Complex64| v.im),
            ("abs", |v: Complex64| v.norm()),
        ] {
            self.write(&format!("jsa/{method}.{part}.tsv"), &matrix_table(n, n, |s, i| f(map.get(s, i))))?;
        }
        Ok(())
    }

    fn jsa(&mut self) -> Result<()> {
        let (fwm, quad) = self.cfg.fwm()?;
        let rft = self.timed("jsa_rft", || jsa_rft(&fwm))?;
        let direct = self.timed("jsa_direct", || jsa_direct(&fwm, &quad))?;
        let reference = jsa_reference(&fwm)?;
        let mut axes = String::from("index\tsignal\tidler\n");
        for (q, (s, i)) in rft.signal.iter().zip(&rft.idler).enumerate() {
            writeln!(axes, "{q}\t{s:.16e}\t{i:.16e}").unwrap();
        }
        self.write("jsa/axes.tsv", &axes)?;
        self.write_jsa("rft", &rft)?;
        self.write_jsa("direct", &direct)?;
        self.write_jsa("reference", &reference)?;
        let mut text = String::new();
        writeln!(text, "rft_vs_direct_relative_l2={:.6e}", rft.relative_l2(&direct)?).unwrap();
        writeln!(text, "rft_vs_reference_relative_l2={:.6e}", rft.relative_l2(&reference)?).unwrap();
        writeln!(text, "direct_vs_reference_relative_l2={:.6e}", direct.relative_l2(&reference)?).unwrap();
        for (m, map) in [("rft", &rft), ("direct", &direct), ("reference", &reference)] {
            writeln!(text, "{m}_ridge_sum_frequency={:.6e}", map.ridge_sum_frequency()).unwrap();
            writeln!(text, "{m}_swap_asymmetry={:.6e}", map.swap_asymmetry()).unwrap();
        }
        writeln!(text, "pump_dispersion_negligible={}", fwm.fiber_approximation_valid()).unwrap();
        self.write("jsa/summary.txt", &text)
    }

    fn transfer_dump(&mut self) -> Result<()> {
        let cfg = self.cfg;
        let (spec, model, grid) = (cfg.transition()?, cfg.potential()?, cfg.grid()?);
        spec.validate_second_order(&grid)?;
        for k in spec.k_range() {
            let trace = impulse_response(&spec, &model, &grid, k)?;
            let elapsed: Vec<f64> = trace.elapsed().collect();
            self.write(&format!("transfer/trace_k{k}.tsv"), &complex_table("delta", &elapsed, &trace.values)?)?;
            self.write(&format!("transfer/padded_k{k}.tsv"), &signal_table(&trace.tiled(&grid)?)?)?;
            let psi = transfer_function(&trace, &spec, &grid)?;
            self.write(&format!("transfer/psi_k{k}.tsv"), &signal_table(&psi.values)?)?;
        }
        let k_range = cfg.transfer_dump.k_range;
        let profile = self.timed("transfer_profile", || summed_transfer_profile(&spec, &model, &grid, k_range))?;
        self.write("transfer/profile.tsv", &signal_table(&profile)?)?;

        // |Σ Ψ̃| at the level spacings m ω₀, m ≠ 0, against 1/|ω|.
        let w0 = spec.omega0;
        let (mut x, mut y) = (Vec::new(), Vec::new());
        for m in (-(k_range as i64)..=k_range as i64).filter(|&m| m != 0) {
            let w = m as f64 * w0;
            if let Ok(v) = profile.at_frequency(w) {
                x.push(1.0 / w.abs());
                y.push(v.norm());
            }
        }
        let mut text = String::new();
        if x.len() >= 2 {
            let (c, r2) = proportional_fit(&x, &y);
            writeln!(text, "model=abs_profile = C / |omega|\nC={c:.6e}\nr_squared={r2:.6}\npoints={}", x.len()).unwrap();
        } else {
            writeln!(text, "model=abs_profile = C / |omega|\npoints={}", x.len()).unwrap();
        }
        self.write("transfer/fit.txt", &text)
    }

    /// Central peak and mean wing magnitude of first and second order, each
    /// scaled to unit norm.
    fn order_compare(&mut self) -> Result<()> {
        let spec = self.cfg.transition()?;
        let (w_i, w0) = (spec.omega_i(), spec.omega0);
        let mut text = String::new();
        let mut stats = Vec::new();
        for name in ["first_order", "second_order"] {
            let t = self
                .tables
                .get(name)
                .ok_or_else(|| Error::param("order_compare", format!("needs an earlier `{name}` task")))?;
            let norm = t.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
            let mags: Vec<f64> = t.values.iter().map(|v| v.norm() / norm).collect();
            let center = t
                .coords
                .iter()
                .position(|w| (w - w_i).abs() < 1e-9 * w0.max(1.0))
                .map(|m| mags[m])
                .ok_or_else(|| Error::param("order_compare", "ω_i is not a grid frequency"))?;
            let wing: Vec<f64> = t
                .coords
                .iter()
                .zip(&mags)
                .filter(|(w, _)| (3.0 * w0..=8.0 * w0).contains(&(*w - w_i).abs()))
                .map(|(_, m)| *m)
                .collect();
            let wing = wing.iter().sum::<f64>() / wing.len().max(1) as f64;
            writeln!(text, "{name}_center={center:.6e}\n{name}_wing_mean={wing:.6e}").unwrap();
            stats.push((center, wing));
        }
        writeln!(text, "central_peak_reduced={}", stats[1].0 < stats[0].0).unwrap();
        writeln!(text, "wings_amplified={}", stats[1].1 > stats[0].1).unwrap();
        self.write("order_compare.txt", &text)
    }

    fn compare(&mut self) -> Result<()> {
        if self.cfg.compare.is_empty() {
            return Err(Error::param("compare", "the compare task needs [[compare]] entries"));
        }
        for pair in &self.cfg.compare {
            let get = |n: &str| {
                self.tables
                    .get(n)
                    .ok_or_else(|| Error::param("compare", format!("`{n}` was not produced by an earlier task")))
            };
            let mut report = ComparisonReport::new(&pair.a, get(&pair.a)?, &pair.b, get(&pair.b)?)?;
            let time = |n: &str| self.summary.runtimes.iter().find(|(t, _)| t == n).map(|(_, s)| *s);
            report.runtime_a = time(&pair.a);
            report.runtime_b = time(&pair.b);
            self.write(&format!("compare_{}_vs_{}.txt", pair.a, pair.b), &report.to_text(false))?;
            self.summary.reports.push(report);
        }
        Ok(())
    }

    fn manifest(&mut self, config_text: &str) -> Result<()> {
        let grid = self.cfg.grid()?;
        let mut m = String::new();
        writeln!(m, "scenario={}", self.cfg.name).unwrap();
        writeln!(m, "version={VERSION}").unwrap();
        writeln!(m, "config_sha256={}", sha256(config_text.as_bytes())).unwrap();
        writeln!(m, "grid.n_samples={}", grid.n_samples()).unwrap();
        writeln!(m, "grid.dt={:.16e}", grid.dt()).unwrap();
        writeln!(m, "grid.dw={:.16e}", grid.dw()).unwrap();
        let tasks: Vec<&str> = self.cfg.tasks.iter().map(Task::name).collect();
        writeln!(m, "tasks={}", tasks.join(",")).unwrap();
        for (path, hash) in &self.summary.outputs {
            writeln!(m, "output.{path}={hash}").unwrap();
        }
        std::fs::write(self.out.join("manifest.txt"), m)?;
        Ok(())
    }
}

/// Runs every task of a scenario into `out`, then writes `manifest.txt`.
///
/// Output files depend only on the configuration, so two runs of the same
/// file give byte-identical directories.
pub fn run_scenario(cfg: &ScenarioConfig, config_text: &str, out: &Path) -> Result<RunSummary> {
    if cfg.tasks.is_empty() {
        return Err(Error::param("tasks", "no tasks listed"));
    }
    cfg.grid()?;
    std::fs::create_dir_all(out)?;
    let mut runner = Runner {
        cfg,
        out,
        summary: RunSummary {
            out_dir: out.to_path_buf(),
            ..Default::default()
        },
        tables: BTreeMap::new(),
    };
    for &task in &cfg.tasks {
        runner.task(task)?;
    }
    runner.manifest(config_text)?;
    Ok(runner.summary)
}

/// Compares two tables on disk, `b` taken as the reference.
pub fn compare_files(a: &Path, b: &Path) -> Result<ComparisonReport> {
    ComparisonReport::new(&a.display().to_string(), &Table::load(a)?, &b.display().to_string(), &Table::load(b)?)
}
