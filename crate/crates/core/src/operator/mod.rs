//! Discrete kinetic operator with boundary closure, the Feshbach-Villars
//! Hamiltonian and stationary modes.

mod banded;
mod closure;
mod hamiltonian;
mod kinetic;
mod modes;
mod tricorner;

pub use banded::BandLu;
pub use closure::{Closure, ClosureKind};
pub use hamiltonian::{assemble_fv_hamiltonian, DiscreteHamiltonian, PSEUDO_HERMITIAN_TOL};
pub use kinetic::{assemble_kinetic, KineticMatrix};
pub use modes::{eigenmodes, spectrum, synthesize_state, Mode, ModeCoefficient, ModeSet, SpectralDiagnostic};
pub use tricorner::TriCorner;
