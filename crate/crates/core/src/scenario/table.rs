//! Plain-text tables: tab-separated, one header row, `{:.16e}` numbers.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::{relative_l2, SpectralSignal};

/// Renders `coordinate, re, im, abs, abs2` rows.
pub fn complex_table(axis_name: &str, coords: &[f64], values: &[Complex64]) -> Result<String> {
    let mut out = format!("{axis_name}\tre\tim\tabs\tabs2\n");
    for (x, v) in coords.iter().zip(values) {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::NonFinite(format!("table row at {axis_name} = {x}")));
        }
        writeln!(
            out,
            "{:.16e}\t{:.16e}\t{:.16e}\t{:.16e}\t{:.16e}",
            x,
            v.re,
            v.im,
            v.norm(),
            v.norm_sqr()
        )
        .unwrap();
    }
    Ok(out)
}

pub fn signal_table(signal: &SpectralSignal) -> Result<String> {
    let axis = match signal.domain() {
        crate::spectral::Domain::Time => "t",
        crate::spectral::Domain::Frequency => "omega",
    };
    complex_table(axis, &signal.coordinates(), signal.values())
}

/// Row-major matrix of reals, one row per line.
pub fn matrix_table(rows: usize, cols: usize, f: impl Fn(usize, usize) -> f64) -> String {
    let mut out = String::new();
    for r in 0..rows {
        let line: Vec<String> = (0..cols).map(|c| format!("{:.16e}", f(r, c))).collect();
        out.push_str(&line.join("\t"));
        out.push('\n');
    }
    out
}

/// A table read back from disk: the coordinate column and complex values.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub coords: Vec<f64>,
    pub values: Vec<Complex64>,
}

impl Table {
    pub fn parse(text: &str) -> Result<Self> {
        let mut coords = Vec::new();
        let mut values = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            let nums: std::result::Result<Vec<f64>, _> = cols.iter().take(3).map(|c| c.trim().parse()).collect();
            match nums {
                Ok(n) if n.len() == 3 => {
                    coords.push(n[0]);
                    values.push(Complex64::new(n[1], n[2]));
                }
                _ if coords.is_empty() && lineno == 0 => continue,
                _ => return Err(Error::Parse(format!("table line {}: `{line}`", lineno + 1))),
            }
        }
        if values.is_empty() {
            return Err(Error::Parse("table has no rows".into()));
        }
        Ok(Self { coords, values })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn from_signal(signal: &SpectralSignal) -> Self {
        Self {
            coords: signal.coordinates(),
            values: signal.values().to_vec(),
        }
    }

    fn peak(&self) -> usize {
        crate::analysis::argmax(&self.values.iter().map(|v| v.norm()).collect::<Vec<_>>())
    }
}

/// Accuracy of `a` against the reference `b`, plus optional timings.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub label_a: String,
    pub label_b: String,
    pub relative_l2: f64,
    pub max_abs_diff: f64,
    /// `peak(a) - peak(b)` in bins.
    pub peak_offset_bins: i64,
    pub runtime_a: Option<f64>,
    pub runtime_b: Option<f64>,
}

impl ComparisonReport {
    pub fn new(label_a: &str, a: &Table, label_b: &str, b: &Table) -> Result<Self> {
        if a.coords.len() != b.coords.len() {
            return Err(Error::GridMismatch(format!(
                "{label_a} has {} rows, {label_b} has {}",
                a.coords.len(),
                b.coords.len()
            )));
        }
        let scale = a.coords.iter().chain(&b.coords).fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
        if a.coords.iter().zip(&b.coords).any(|(x, y)| (x - y).abs() > 1e-9 * scale) {
            return Err(Error::GridMismatch(format!("{label_a} and {label_b} use different axes")));
        }
        let max_abs_diff = a
            .values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max);
        Ok(Self {
            label_a: label_a.into(),
            label_b: label_b.into(),
            relative_l2: relative_l2(&a.values, &b.values),
            max_abs_diff,
            peak_offset_bins: a.peak() as i64 - b.peak() as i64,
            runtime_a: None,
            runtime_b: None,
        })
    }

    /// Key-value text. Timings are left out unless asked for so that the
    /// file form stays reproducible.
    pub fn to_text(&self, with_runtimes: bool) -> String {
        let mut s = format!(
            "a={}\nb={}\nrelative_l2={:.6e}\nmax_abs_diff={:.6e}\npeak_offset_bins={}\n",
            self.label_a, self.label_b, self.relative_l2, self.max_abs_diff, self.peak_offset_bins
        );
        if with_runtimes {
            for (name, t) in [("runtime_a_s", self.runtime_a), ("runtime_b_s", self.runtime_b)] {
                if let Some(t) = t {
                    writeln!(s, "{name}={t:.4}").unwrap();
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_round_trips_exactly() {
        let coords = [-0.5, 0.0, 0.5];
        let values = [
            Complex64::new(1.0 / 3.0, -2.0),
            Complex64::new(0.0, 1e-300),
            Complex64::new(std::f64::consts::PI, 0.1),
        ];
        let text = complex_table("omega", &coords, &values).unwrap();
        let t = Table::parse(&text).unwrap();
        assert_eq!(t.coords, coords);
        assert_eq!(t.values, values);
    }

    #[test]
    fn refuses_nan_rows() {
        let r = complex_table("omega", &[0.0], &[Complex64::new(f64::NAN, 0.0)]);
        assert!(matches!(r, Err(Error::NonFinite(_))));
    }

    #[test]
    fn report_of_identical_tables() {
        let t = Table {
            coords: vec![0.0, 1.0, 2.0],
            values: vec![Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0)],
        };
        let r = ComparisonReport::new("a", &t, "b", &t).unwrap();
        assert_eq!(r.relative_l2, 0.0);
        assert_eq!(r.peak_offset_bins, 0);
        assert!(!r.to_text(false).contains("runtime"));
    }
}
