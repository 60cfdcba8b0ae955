//! Experiment harness for `kfgm-core`: JSON configs, CSV and JSON reports,
//! and the verification suites behind the `kfgm` binary.

pub mod config;
pub mod error;
pub mod experiment;
pub mod report;
pub mod verify;

pub use config::ExperimentConfig;
pub use error::{LabError, Result};
pub use experiment::Experiment;
pub use report::{run_classify, run_enumerate, run_evolve, run_spectrum, ClassifyReport, EvolveOutput};
pub use verify::{run_all, run_verify, CheckResult, VerifySuiteResult, SUITES};
