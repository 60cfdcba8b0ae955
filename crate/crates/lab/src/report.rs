//! Classification, spectrum, trajectory and enumeration reports.

use kfgm_core::bc::{classify, enumerate_confining_solutions, enumerate_energy_slice, BcParams, ConfiningPoint};
use kfgm_core::evolution::{evolve, Trajectory};
use kfgm_core::observables::{global_summary, local_fields};
use kfgm_core::operator::eigenmodes;
use kfgm_core::Complex64;
use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::Result;
use crate::experiment::Experiment;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamsReport {
    pub m0: f64,
    pub m1: f64,
    pub m2: f64,
    pub m3: f64,
    pub mu: f64,
    pub lambda: f64,
}

impl From<&BcParams> for ParamsReport {
    fn from(p: &BcParams) -> Self {
        Self { m0: p.m0, m1: p.m1, m2: p.m2, m3: p.m3, mu: p.mu, lambda: p.lambda }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyReport {
    pub params: ParamsReport,
    pub majorana_compatible: bool,
    pub confining: bool,
    pub tau1_condition: Option<bool>,
    pub energy_condition: Option<bool>,
    pub named_match: Option<String>,
    pub case: Option<String>,
    pub confining_products: Vec<f64>,
    pub tau1_defects: Vec<f64>,
    pub energy_residuals: Vec<f64>,
    pub det_defect: Option<f64>,
}

pub fn classify_params(p: &BcParams) -> ClassifyReport {
    let r = classify(p);
    ClassifyReport {
        params: p.into(),
        majorana_compatible: r.majorana_compatible,
        confining: r.confining,
        tau1_condition: r.tau1_condition,
        energy_condition: r.energy_condition,
        named_match: r.named_match.map(|t| t.to_string()),
        case: r.named_match.map(|t| t.case().to_string()),
        confining_products: r.values.confining_products,
        tau1_defects: r.values.tau1_defects,
        energy_residuals: r.values.energy_residuals,
        det_defect: r.values.det_defect,
    }
}

pub fn run_classify(config: &ExperimentConfig) -> Result<ClassifyReport> {
    Ok(classify_params(&config.params()?))
}

fn header(config: &ExperimentConfig, extra: &[String]) -> String {
    let mut out = format!("# config_hash={}\n", config.hash());
    for line in extra {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    out
}

fn table(rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn nums(v: &[f64]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// `index, energy_sq, energy`; rows with `E^2 <= 0` carry `NaN` energy.
pub fn run_spectrum(config: &ExperimentConfig) -> Result<String> {
    let exp = Experiment::new(config.clone())?;
    let modes = eigenmodes(&exp.kinetic)?;
    let mut rows: Vec<(usize, f64, f64)> = modes.modes.iter().map(|m| (m.index, m.energy_sq, m.energy)).collect();
    rows.extend(modes.diagnostics.iter().map(|d| (d.index, d.energy_sq, f64::NAN)));
    rows.sort_by_key(|r| r.0);
    let head = header(config, &[format!("spectral_diagnostics={}", modes.diagnostics.len())]);
    let body = table(
        std::iter::once(strs(&["index", "energy_sq", "energy"]))
            .chain(rows.iter().map(|&(i, e2, e)| vec![i.to_string(), e2.to_string(), e.to_string()])),
    )?;
    Ok(head + &body)
}

pub const SUMMARY_COLUMNS: [&str; 20] = [
    "t",
    "norm",
    "energy_mean",
    "momentum_mean",
    "J_E",
    "J_tilde_E",
    "j_a",
    "j_b",
    "jE_a",
    "jE_b",
    "jtildeE_a",
    "jtildeE_b",
    "surface_term",
    "eq39_residual",
    "eq73_residual",
    "energy_mean_im",
    "momentum_mean_im",
    "J_E_im",
    "jE_a_im",
    "jE_b_im",
];

const FIELD_NAMES: [&str; 9] = ["rho", "j", "rho_E", "j_E", "rho_tilde_E", "T00", "cT10", "T11", "t01_check"];

#[derive(Debug, Clone)]
pub struct EvolveOutput {
    pub summary: String,
    pub fields: String,
    pub trajectory: Trajectory,
}

/// Evolves the configured initial state; the summary has one row per
/// recorded step and the field table describes the last one.
pub fn run_evolve(config: &ExperimentConfig) -> Result<EvolveOutput> {
    let exp = Experiment::new(config.clone())?;
    let initial = exp.initial_state()?;
    let traj = evolve(&initial, &exp.kinetic, &config.evolution()?)?;
    let modes_diag = eigenmodes(&exp.kinetic)?.diagnostics;
    let mut meta = vec![
        format!("indefinite_spectrum={}", traj.indefinite_spectrum),
        format!("spectral_diagnostics={}", modes_diag.len()),
    ];
    meta.extend(modes_diag.iter().map(|d| format!("diagnostic index={} energy_sq={}", d.index, d.energy_sq)));

    let mut rows = vec![strs(&SUMMARY_COLUMNS)];
    for snap in &traj.snapshots {
        let k = exp.kinetic.at_time(snap.t)?;
        let g = global_summary(&snap.state, &k, &exp.params)?;
        rows.push(nums(&[
            g.t,
            g.norm,
            g.energy_mean.re,
            g.momentum_mean.re,
            g.j_e_integral.re,
            g.j_tilde_e_integral,
            g.boundary_j.a.re,
            g.boundary_j.b.re,
            g.boundary_j_e.a.re,
            g.boundary_j_e.b.re,
            g.boundary_jtilde_e.a,
            g.boundary_jtilde_e.b,
            g.surface_term,
            g.eq39_residual,
            g.eq73_residual,
            g.energy_mean.im,
            g.momentum_mean.im,
            g.j_e_integral.im,
            g.boundary_j_e.a.im,
            g.boundary_j_e.b.im,
        ]));
    }
    let summary = header(config, &meta) + &table(rows)?;

    let last = traj.snapshots.last().expect("trajectory has the initial snapshot");
    let f = local_fields(&last.state, &exp.kinetic.at_time(last.t)?)?;
    let cols: [&Vec<Complex64>; 9] = [&f.rho, &f.j, &f.rho_e, &f.j_e, &f.rho_tilde_e, &f.t00, &f.ct10, &f.t11, &f.t01_check];
    let mut head = vec!["x".to_string()];
    for name in FIELD_NAMES {
        head.push(format!("{name}_re"));
        head.push(format!("{name}_im"));
    }
    let mut rows = vec![head];
    for (i, x) in exp.grid.points().into_iter().enumerate() {
        let mut r = vec![x.to_string()];
        for c in cols {
            r.push(c[i].re.to_string());
            r.push(c[i].im.to_string());
        }
        rows.push(r);
    }
    let fields = header(config, &[format!("t={}", last.t)]) + &table(rows)?;
    Ok(EvolveOutput { summary, fields, trajectory: traj })
}

/// Confining solutions and the energy-condition slice as one CSV table.
pub fn run_enumerate(samples: usize, tol: f64) -> Result<String> {
    let conf = enumerate_confining_solutions(samples, tol)?;
    let slice = enumerate_energy_slice(samples.min(10_000), tol)?;
    let row = |set: &str, p: &ConfiningPoint| {
        let mut r = vec![set.to_string()];
        r.extend(nums(&[p.m0, p.m1, p.m3, p.mu, p.residual]));
        r
    };
    let mut out = format!("# samples={samples} tol={tol}\n");
    out += &table(
        std::iter::once(strs(&["set", "m0", "m1", "m3", "mu", "residual"]))
            .chain(conf.iter().map(|p| row("confining", p)))
            .chain(slice.iter().map(|p| row("energy_slice", p))),
    )?;
    Ok(out)
}
