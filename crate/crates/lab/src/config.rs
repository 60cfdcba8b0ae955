//! JSON experiment configuration.

use std::path::Path;

use kfgm_core::bc::{BcParams, CatalogTag};
use kfgm_core::model::{Grid, MajoranaKind, PhysicalUnits, ScalarPotential, SpatialProfile, TimeFactor};
use kfgm_core::evolution::EvolutionConfig;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{LabError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub units: UnitsConfig,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default)]
    pub potential: PotentialConfig,
    pub bc: BcSpec,
    #[serde(default)]
    pub majorana: KindSpec,
    #[serde(default)]
    pub initial: InitialSpec,
    #[serde(default)]
    pub evolution: EvolutionSpec,
    #[serde(default)]
    pub output: OutputPaths,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitsConfig {
    pub hbar: f64,
    pub c: f64,
    pub mass: f64,
    pub lambda: f64,
}

impl Default for UnitsConfig {
    fn default() -> Self {
        Self { hbar: 1.0, c: 1.0, mass: 1.0, lambda: 1.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub a: f64,
    pub b: f64,
    pub n: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self { a: 0.0, b: 1.0, n: 128 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ProfileSpec {
    Constant { value: f64 },
    Step { x0: f64, left: f64, right: f64 },
    Quadratic { s0: f64, s2: f64, x0: f64 },
    Tabulated { xs: Vec<f64>, values: Vec<f64> },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum TimeSpec {
    Constant,
    Sinusoidal { offset: f64, amplitude: f64, omega: f64, phase: f64 },
    Linear { offset: f64, rate: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialConfig {
    pub profile: ProfileSpec,
    #[serde(default = "constant_time")]
    pub time: TimeSpec,
    #[serde(default)]
    pub nonneg: bool,
}

fn constant_time() -> TimeSpec {
    TimeSpec::Constant
}

impl Default for PotentialConfig {
    fn default() -> Self {
        Self { profile: ProfileSpec::Constant { value: 0.0 }, time: TimeSpec::Constant, nonneg: false }
    }
}

/// A catalog tag such as `"dirichlet"` or `"rotation:0.5"`, or raw parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BcSpec {
    Tag(String),
    Raw { m0: f64, m1: f64, m2: f64, m3: f64, mu: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KindSpec {
    Plus,
    Minus,
    #[default]
    None,
}

impl From<KindSpec> for MajoranaKind {
    fn from(k: KindSpec) -> Self {
        match k {
            KindSpec::Plus => MajoranaKind::Plus,
            KindSpec::Minus => MajoranaKind::Minus,
            KindSpec::None => MajoranaKind::None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientSpec {
    pub index: usize,
    pub amplitude: f64,
    #[serde(default)]
    pub phase: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialSpec {
    /// Superposition of stationary modes, indices counted among modes with `E^2 > 0`.
    Modes {
        coefficients: Vec<CoefficientSpec>,
        #[serde(default)]
        t0: f64,
    },
    /// Node values as `[re, im]` pairs, projected onto the boundary closure.
    Tabulated { psi: Vec<[f64; 2]>, psi_t: Vec<[f64; 2]> },
    /// Seeded random amplitudes and phases on the lowest `modes` modes.
    Random { modes: usize },
    Zero,
}

impl Default for InitialSpec {
    fn default() -> Self {
        InitialSpec::Modes { coefficients: vec![CoefficientSpec { index: 0, amplitude: 1.0, phase: 0.0 }], t0: 0.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvolutionSpec {
    pub dt: f64,
    pub steps: usize,
    #[serde(default = "one")]
    pub record_every: usize,
}

fn one() -> usize {
    1
}

impl Default for EvolutionSpec {
    fn default() -> Self {
        Self { dt: 1e-3, steps: 100, record_every: 10 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputPaths {
    pub summary: String,
    pub fields: String,
    pub spectrum: String,
    pub report: String,
}

impl Default for OutputPaths {
    fn default() -> Self {
        Self {
            summary: "summary.csv".into(),
            fields: "fields.csv".into(),
            spectrum: "spectrum.csv".into(),
            report: "classify.json".into(),
        }
    }
}

fn cfg<T>(r: kfgm_core::Result<T>) -> Result<T> {
    r.map_err(|e| LabError::config(e.to_string()))
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| LabError::config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LabError::config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// SHA-256 of the canonical JSON form, defaults filled in.
    pub fn hash(&self) -> String {
        let text = serde_json::to_string(self).expect("config serializes");
        Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn units(&self) -> Result<PhysicalUnits> {
        let u = self.units;
        cfg(PhysicalUnits::new(u.hbar, u.c, u.mass, u.lambda))
    }

    pub fn grid(&self) -> Result<Grid> {
        cfg(Grid::new(self.grid.a, self.grid.b, self.grid.n))
    }

    pub fn potential(&self) -> Result<ScalarPotential> {
        let p = &self.potential;
        let profile = match p.profile.clone() {
            ProfileSpec::Constant { value } => SpatialProfile::Constant { value },
            ProfileSpec::Step { x0, left, right } => SpatialProfile::Step { x0, left, right },
            ProfileSpec::Quadratic { s0, s2, x0 } => SpatialProfile::Quadratic { s0, s2, x0 },
            ProfileSpec::Tabulated { xs, values } => SpatialProfile::Tabulated { xs, values },
        };
        let time = match p.time {
            TimeSpec::Constant => TimeFactor::Constant,
            TimeSpec::Sinusoidal { offset, amplitude, omega, phase } => {
                TimeFactor::Sinusoidal { offset, amplitude, omega, phase }
            }
            TimeSpec::Linear { offset, rate } => TimeFactor::Linear { offset, rate },
        };
        cfg(ScalarPotential::new(profile, time, p.nonneg))
    }

    pub fn params(&self) -> Result<BcParams> {
        let lambda = self.units.lambda;
        match &self.bc {
            BcSpec::Tag(name) => {
                let tag: CatalogTag = name.parse().map_err(|_| LabError::config(format!("unknown catalog tag '{name}'")))?;
                if lambda <= 0.0 || !lambda.is_finite() {
                    return Err(LabError::config("lambda must be positive"));
                }
                Ok(tag.params(lambda))
            }
            &BcSpec::Raw { m0, m1, m2, m3, mu } => cfg(BcParams::new(m0, m1, m2, m3, mu, lambda)),
        }
    }

    pub fn kind(&self) -> MajoranaKind {
        self.majorana.into()
    }

    pub fn evolution(&self) -> Result<EvolutionConfig> {
        let e = self.evolution;
        cfg(EvolutionConfig::new(e.dt, e.steps, e.record_every))
    }
}
