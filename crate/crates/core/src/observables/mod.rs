//! Local densities, boundary values, global integrals, decomposition
//! identities and conservation-law residuals.

mod boundary;
mod continuity;
mod decompose;
mod fields;
mod global;

pub use boundary::{boundary_ej, boundary_j, boundary_j_e, boundary_jtilde_e, EndValues, JTildeEnds};
pub use continuity::{continuity_residuals, ContinuityResiduals};
pub use decompose::{decomposition_checks, DecompositionResiduals};
pub use fields::{local_fields, two_component_fields, ObservableFields, TwoComponentFields};
pub use global::{global_summary, GlobalSummary, PositivityTerms};
