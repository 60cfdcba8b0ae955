use std::f64::consts::TAU;

use kfgm_core::bc::{realize, BcParams};
use kfgm_core::model::{majorana_project, Grid, KfgState, MajoranaKind, PhysicalUnits};
use kfgm_core::operator::{assemble_kinetic, eigenmodes, synthesize_state, KineticMatrix, ModeCoefficient};
use kfgm_core::{Complex64, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{ExperimentConfig, InitialSpec};
use crate::error::{LabError, Result};

/// A validated config together with its assembled operator.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub config: ExperimentConfig,
    pub units: PhysicalUnits,
    pub grid: Grid,
    pub params: BcParams,
    pub kinetic: KineticMatrix,
}

impl Experiment {
    pub fn new(config: ExperimentConfig) -> Result<Self> {
        let units = config.units()?;
        let grid = config.grid()?;
        let params = config.params()?;
        let potential = config.potential()?;
        let real = realize(&params).map_err(|e| LabError::config(e.to_string()))?;
        let t0 = match config.initial {
            InitialSpec::Modes { t0, .. } => t0,
            _ => 0.0,
        };
        let kinetic = assemble_kinetic(&grid, &potential, t0, &real, &units)?;
        Ok(Self { config, units, grid, params, kinetic })
    }

    pub fn kind(&self) -> MajoranaKind {
        self.config.kind()
    }

    pub fn initial_state(&self) -> Result<KfgState> {
        let kind = self.kind();
        let n = self.grid.n();
        let coefficients = match &self.config.initial {
            InitialSpec::Zero => {
                let mut s = KfgState::zeros(n, 0.0);
                s.kind = kind;
                return Ok(s);
            }
            InitialSpec::Tabulated { psi, psi_t } => {
                if psi.len() != n || psi_t.len() != n {
                    return Err(LabError::config(format!("tabulated state needs {n} nodes")));
                }
                let c = |v: &Vec<[f64; 2]>| v.iter().map(|&[re, im]| Complex64::new(re, im)).collect::<Vec<_>>();
                let closure = self.kinetic.closure();
                let s = KfgState::new(closure.project(&c(psi)), closure.project(&c(psi_t)), 0.0, MajoranaKind::None)
                    .map_err(|e| LabError::config(e.to_string()))?;
                return Ok(if kind == MajoranaKind::None { s } else { majorana_project(&s, kind) });
            }
            InitialSpec::Modes { coefficients, .. } => {
                coefficients.iter().map(|c| ModeCoefficient::new(c.index, c.amplitude, c.phase)).collect()
            }
            InitialSpec::Random { modes } => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
                (0..*modes)
                    .map(|i| ModeCoefficient::new(i, rng.gen_range(0.2..1.0), rng.gen_range(0.0..TAU)))
                    .collect::<Vec<_>>()
            }
        };
        let t0 = self.kinetic.time();
        let modes = eigenmodes(&self.kinetic)?;
        synthesize_state(&modes, &coefficients, t0, kind, self.units.hbar).map_err(|e| match e {
            Error::InvalidMode { .. } | Error::NotMajoranaCompatible => LabError::config(e.to_string()),
            e => e.into(),
        })
    }
}
