use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid units: {0}")]
    InvalidUnits(&'static str),
    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),
    #[error("invalid potential: {0}")]
    InvalidPotential(&'static str),
    #[error("invalid state: {0}")]
    InvalidState(&'static str),
    #[error("invalid boundary parameters: {0}")]
    InvalidParams(&'static str),
    #[error("boundary condition is not compatible with the Majorana condition")]
    NotMajoranaCompatible,
    #[error("check does not apply to this branch of the family")]
    WrongBranch,
    #[error("boundary closure cannot be eliminated")]
    SingularClosure,
    #[error("closure is not pseudo self-adjoint (defect {defect:e})")]
    ClosureNotSelfAdjoint { defect: f64 },
    #[error("numerical failure: {0}")]
    NumericalFailure(&'static str),
    #[error("mode index {index} out of range ({count} modes)")]
    InvalidMode { index: usize, count: usize },
    #[error("Cayley propagator is singular")]
    SingularPropagator,
    #[error("invalid evolution config: {0}")]
    InvalidConfig(&'static str),
    #[error("need at least {needed} snapshots, got {got}")]
    InsufficientData { needed: usize, got: usize },
}
