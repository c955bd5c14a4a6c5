use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::jsa::FwmConfig;
use crate::oracle::{QuadratureConfig, QuadratureRule};
use crate::potential::{PotentialModel, RampProfile, DEFAULT_STRENGTH};
use crate::spectral::DualGrid;
use crate::transition::{FundamentalConvention, KEqualsIMode, Numerics, TransitionSpec};

/// A scenario file. Frequencies are written in units of the grid's `dω`,
/// times in the grid's time unit.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub tasks: Vec<Task>,
    pub grid: GridSection,
    #[serde(default)]
    pub transition: TransitionSection,
    pub potential: Option<PotentialSection>,
    #[serde(default)]
    pub oracle: OracleSection,
    pub drive: Option<DriveSection>,
    pub bias: Option<BiasSection>,
    pub jsa: Option<JsaSection>,
    #[serde(default)]
    pub compare: Vec<ComparePair>,
    #[serde(default)]
    pub transfer_dump: TransferDumpSection,
    /// Directory used to resolve relative paths; not part of the file.
    #[serde(skip)]
    pub base_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    FirstOrder,
    SecondOrder,
    OracleFirst,
    OracleSecond,
    #[serde(rename = "golden_rule_1")]
    GoldenRule1,
    #[serde(rename = "golden_rule_2")]
    GoldenRule2,
    GaussianAsymptotic,
    #[serde(rename = "bardeen_1")]
    Bardeen1,
    #[serde(rename = "bardeen_2")]
    Bardeen2,
    Jsa,
    TransferDump,
    OrderCompare,
    Compare,
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::FirstOrder => "first_order",
            Task::SecondOrder => "second_order",
            Task::OracleFirst => "oracle_first",
            Task::OracleSecond => "oracle_second",
            Task::GoldenRule1 => "golden_rule_1",
            Task::GoldenRule2 => "golden_rule_2",
            Task::GaussianAsymptotic => "gaussian_asymptotic",
            Task::Bardeen1 => "bardeen_1",
            Task::Bardeen2 => "bardeen_2",
            Task::Jsa => "jsa",
            Task::TransferDump => "transfer_dump",
            Task::OrderCompare => "order_compare",
            Task::Compare => "compare",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSection {
    pub n_samples: usize,
    pub dt: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeName {
    Paper,
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FundamentalName {
    Angular,
    Inverse,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TransitionSection {
    /// Window length `T`; mutually exclusive with `copies`.
    pub window: Option<f64>,
    /// Window as a fraction of the grid span, `T = t_total / copies`.
    pub copies: Option<usize>,
    /// Level spacing in bins; defaults to `2π/T` when `cyclotron` is set.
    pub omega0: Option<f64>,
    pub offset: f64,
    pub i_index: i64,
    pub k_max: usize,
    pub v_fi: [f64; 2],
    pub v_fk_v_ki: [f64; 2],
    pub amplitude: [f64; 2],
    pub k_eq_i_mode: ModeName,
    pub cyclotron: bool,
    pub fundamental: FundamentalName,
    pub skip_poles: bool,
    pub spectral_support: usize,
    pub sampled_support: usize,
    pub working_oversample: usize,
}

impl Default for TransitionSection {
    fn default() -> Self {
        let n = Numerics::default();
        Self {
            window: None,
            copies: None,
            omega0: None,
            offset: 0.0,
            i_index: 0,
            k_max: 4,
            v_fi: [1.0, 0.0],
            v_fk_v_ki: [1.0, 0.0],
            amplitude: [1.0, 0.0],
            k_eq_i_mode: ModeName::Paper,
            cyclotron: true,
            fundamental: FundamentalName::Angular,
            skip_poles: false,
            spectral_support: n.spectral_support,
            sampled_support: n.sampled_support,
            working_oversample: n.working_oversample,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialName {
    GaussianKick,
    HarmonicDrive,
    RampedOscillator,
    ConstantBias,
    Tabulated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileName {
    OneSided,
    TwoSided,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialSection {
    pub kind: PotentialName,
    pub strength: Option<f64>,
    pub tau: Option<f64>,
    pub center: Option<f64>,
    pub omega_d: Option<f64>,
    #[serde(default)]
    pub resonant_only: bool,
    pub epsilon: Option<f64>,
    pub profile: Option<ProfileName>,
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OracleSection {
    pub steps_outer: usize,
    pub steps_inner: usize,
    pub rule: RuleName,
}

impl Default for OracleSection {
    fn default() -> Self {
        Self {
            steps_outer: 1024,
            steps_inner: 1024,
            rule: RuleName::Midpoint,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleName {
    Midpoint,
    Trapezoid,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DriveSection {
    pub omega_d: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiasSection {
    pub bias: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsaSection {
    pub pump_center: f64,
    pub pump_sigma: f64,
    pub gvd: f64,
    pub gamma_p: f64,
    pub fiber_length: f64,
    /// Detection window as a fraction of the sum-grid span.
    pub time_copies: usize,
    pub axis_samples: usize,
    pub sum_samples: usize,
    pub frequency_step: f64,
    pub z_samples: usize,
    pub z_span: f64,
    #[serde(default = "yes")]
    pub pump_dispersion: bool,
    #[serde(default = "default_jsa_steps")]
    pub steps_z: usize,
    #[serde(default = "default_jsa_steps")]
    pub steps_t: usize,
}

fn yes() -> bool {
    true
}

fn default_jsa_steps() -> usize {
    256
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComparePair {
    pub a: String,
    pub b: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TransferDumpSection {
    pub k_range: usize,
}

impl Default for TransferDumpSection {
    fn default() -> Self {
        Self { k_range: 25 }
    }
}

fn complex(v: [f64; 2]) -> Complex64 {
    Complex64::new(v[0], v[1])
}

fn require<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| Error::param(name, "required for this potential"))
}

impl ScenarioConfig {
    pub fn from_toml(text: &str, base_dir: &Path) -> Result<Self> {
        let mut cfg: ScenarioConfig = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        cfg.base_dir = base_dir.to_path_buf();
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<(Self, String)> {
        let text = std::fs::read_to_string(path)?;
        let base = path.parent().unwrap_or(Path::new("."));
        Ok((Self::from_toml(&text, base)?, text))
    }

    pub fn grid(&self) -> Result<DualGrid> {
        DualGrid::new(self.grid.n_samples, self.grid.dt)
    }

    pub fn transition(&self) -> Result<TransitionSpec> {
        let grid = self.grid()?;
        let t = &self.transition;
        let window = match (t.window, t.copies) {
            (Some(w), None) => w,
            (None, Some(c)) if c > 0 => grid.t_total() / c as f64,
            (None, None) => return Err(Error::param("transition.window", "set `window` or `copies`")),
            _ => return Err(Error::param("transition.window", "set exactly one of `window` and `copies`")),
        };
        let fundamental = match t.fundamental {
            FundamentalName::Angular => FundamentalConvention::Angular,
            FundamentalName::Inverse => FundamentalConvention::Inverse,
        };
        let omega0 = match t.omega0 {
            Some(bins) => bins * grid.dw(),
            None if t.cyclotron => match fundamental {
                FundamentalConvention::Angular => std::f64::consts::TAU / window,
                FundamentalConvention::Inverse => 1.0 / window,
            },
            None => return Err(Error::param("transition.omega0", "required without `cyclotron`")),
        };
        let mut spec = TransitionSpec::new(omega0, window)
            .with_offset(t.offset)
            .with_initial(t.i_index)
            .with_k_max(t.k_max)
            .with_skip_poles(t.skip_poles)
            .with_mode(match t.k_eq_i_mode {
                ModeName::Paper => KEqualsIMode::Paper,
                ModeName::Literal => KEqualsIMode::Literal,
            })
            .with_numerics(Numerics {
                spectral_support: t.spectral_support,
                sampled_support: t.sampled_support,
                working_oversample: t.working_oversample,
            });
        spec.cyclotron = t.cyclotron;
        spec.fundamental = fundamental;
        spec.v_fi = complex(t.v_fi);
        spec.v_fk_v_ki = complex(t.v_fk_v_ki);
        spec.amplitude = complex(t.amplitude);
        spec.validate(&grid)?;
        Ok(spec)
    }

    pub fn potential(&self) -> Result<PotentialModel> {
        let grid = self.grid()?;
        let p = self
            .potential
            .as_ref()
            .ok_or_else(|| Error::param("potential", "this task needs a [potential] section"))?;
        let dw = grid.dw();
        let model = match p.kind {
            PotentialName::GaussianKick => {
                PotentialModel::gaussian_kick_at(require(p.tau, "tau")?, p.center.unwrap_or(0.0))
            }
            PotentialName::HarmonicDrive => {
                let w = require(p.omega_d, "omega_d")? * dw;
                if p.resonant_only {
                    PotentialModel::resonant_drive(w)
                } else {
                    PotentialModel::harmonic_drive(w)
                }
            }
            PotentialName::RampedOscillator => PotentialModel::ramped_oscillator(
                require(p.epsilon, "epsilon")? * dw,
                require(p.omega_d, "omega_d")? * dw,
                match p.profile.unwrap_or(ProfileName::OneSided) {
                    ProfileName::OneSided => RampProfile::OneSided,
                    ProfileName::TwoSided => RampProfile::TwoSided,
                },
            ),
            PotentialName::ConstantBias => PotentialModel::constant_bias(),
            PotentialName::Tabulated => {
                let file = p.file.as_ref().ok_or_else(|| Error::param("file", "required for tabulated"))?;
                PotentialModel::tabulated_from_file(&self.base_dir.join(file), grid)?
            }
        };
        let model = model.with_strength(p.strength.unwrap_or(DEFAULT_STRENGTH));
        model.validate(&grid)?;
        Ok(model)
    }

    pub fn quadrature(&self) -> Result<QuadratureConfig> {
        let q = QuadratureConfig {
            steps_outer: self.oracle.steps_outer,
            steps_inner: self.oracle.steps_inner,
            rule: match self.oracle.rule {
                RuleName::Midpoint => QuadratureRule::Midpoint,
                RuleName::Trapezoid => QuadratureRule::Trapezoid,
            },
        };
        q.validate()?;
        Ok(q)
    }

    pub fn drive_frequency(&self) -> Result<f64> {
        let d = self.drive.as_ref().ok_or_else(|| Error::param("drive", "needs a [drive] section"))?;
        Ok(d.omega_d * self.grid()?.dw())
    }

    pub fn bias_frequency(&self) -> Result<f64> {
        let b = self.bias.as_ref().ok_or_else(|| Error::param("bias", "needs a [bias] section"))?;
        Ok(b.bias * self.grid()?.dw())
    }

    pub fn fwm(&self) -> Result<(FwmConfig, QuadratureConfig)> {
        let j = self.jsa.as_ref().ok_or_else(|| Error::param("jsa", "needs a [jsa] section"))?;
        let sum_grid = DualGrid::with_frequency_step(j.sum_samples, j.frequency_step)?;
        if j.time_copies == 0 {
            return Err(Error::param("jsa.time_copies", "must be positive"));
        }
        let cfg = FwmConfig {
            pump_center: j.pump_center,
            pump_sigma: j.pump_sigma,
            gvd: j.gvd,
            gamma_p: j.gamma_p,
            fiber_length: j.fiber_length,
            interaction_time: sum_grid.t_total() / j.time_copies as f64,
            axis: DualGrid::with_frequency_step(j.axis_samples, j.frequency_step)?,
            sum_grid,
            z_grid: DualGrid::with_duration(j.z_samples, j.z_span)?,
            pump_dispersion: j.pump_dispersion,
        };
        cfg.validate()?;
        let quad = QuadratureConfig {
            steps_outer: j.steps_z,
            steps_inner: j.steps_t,
            rule: QuadratureRule::Midpoint,
        };
        quad.validate()?;
        Ok((cfg, quad))
    }
}
