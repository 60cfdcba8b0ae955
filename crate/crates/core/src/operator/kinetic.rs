use alloc::vec::Vec;
use num_complex::Complex64;
use num_traits::Float;

use super::{Closure, TriCorner};
use crate::bc::BcRealization;
use crate::model::{Grid, PhysicalUnits, ScalarPotential};
use crate::{Error, Result};

/// Discrete `c^2 p^2 + (mc^2)^2 + 2 mc^2 S` with the boundary closure built in.
///
/// Stored in the weight-symmetrized basis `W^{1/2} psi`, where it is Hermitian
/// whenever the closure is self-adjoint.
#[derive(Debug, Clone, PartialEq)]
pub struct KineticMatrix {
    grid: Grid,
    units: PhysicalUnits,
    potential: ScalarPotential,
    t: f64,
    closure: Closure,
    node_s: Vec<f64>,
    weights: Vec<f64>,
    sqrt_w: Vec<f64>,
    form: TriCorner,
    sym: TriCorner,
}

pub fn assemble_kinetic(
    grid: &Grid,
    potential: &ScalarPotential,
    t: f64,
    bc: &BcRealization,
    units: &PhysicalUnits,
) -> Result<KineticMatrix> {
    let closure = Closure::new(bc, grid, units.lambda)?;
    KineticMatrix::from_closure(grid, potential, t, closure, units)
}

impl KineticMatrix {
    pub fn from_closure(
        grid: &Grid,
        potential: &ScalarPotential,
        t: f64,
        closure: Closure,
        units: &PhysicalUnits,
    ) -> Result<Self> {
        if closure.n_nodes() != grid.n() {
            return Err(Error::InvalidGrid("closure built for a different grid"));
        }
        if closure.n_dof() < 3 {
            return Err(Error::SingularClosure);
        }
        let node_s = potential.sample(grid, t)?;
        let weights = closure.lump(&alloc::vec![1.0; grid.n()]);
        let s_eff: Vec<f64> = closure.lump(&node_s).iter().zip(&weights).map(|(v, w)| v / w).collect();
        let sqrt_w: Vec<f64> = weights.iter().map(|w| w.sqrt()).collect();
        let inv_sqrt: Vec<f64> = sqrt_w.iter().map(|w| 1.0 / w).collect();
        let form = closure.form();
        let hc2 = units.hbar * units.hbar * units.c * units.c;
        let mc2 = units.mc2();
        let mut sym = form.scaled(&inv_sqrt, &inv_sqrt);
        for (i, j) in sym.pattern() {
            *sym.slot(i, j).unwrap() *= hc2;
        }
        for (d, s) in sym.diag.iter_mut().zip(&s_eff) {
            *d += mc2 * mc2 + 2.0 * mc2 * s;
        }
        Ok(Self {
            grid: *grid,
            units: *units,
            potential: potential.clone(),
            t,
            closure,
            node_s,
            weights,
            sqrt_w,
            form,
            sym,
        })
    }

    /// Same closure and potential, resampled at time `t`.
    pub fn at_time(&self, t: f64) -> Result<Self> {
        if t == self.t || self.potential.is_static() {
            let mut k = self.clone();
            k.t = t;
            return Ok(k);
        }
        Self::from_closure(&self.grid, &self.potential, t, self.closure.clone(), &self.units)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }
    pub fn units(&self) -> &PhysicalUnits {
        &self.units
    }
    pub fn potential(&self) -> &ScalarPotential {
        &self.potential
    }
    pub fn time(&self) -> f64 {
        self.t
    }
    pub fn closure(&self) -> &Closure {
        &self.closure
    }
    /// Potential at the nodes at the sample time.
    pub fn node_potential(&self) -> &[f64] {
        &self.node_s
    }
    /// Mass weight of each unknown.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
    pub(crate) fn sqrt_weights(&self) -> &[f64] {
        &self.sqrt_w
    }
    pub fn n_dof(&self) -> usize {
        self.sym.n()
    }

    /// The operator in the symmetrized basis.
    pub fn symmetric(&self) -> &TriCorner {
        &self.sym
    }

    pub fn is_real(&self) -> bool {
        self.sym.is_real()
    }

    /// Copy with `delta` added to entry `(i, j)` of the symmetrized matrix.
    pub fn with_entry_offset(&self, i: usize, j: usize, delta: Complex64) -> Result<Self> {
        let mut k = self.clone();
        *k.sym.slot(i, j).ok_or(Error::InvalidConfig("entry outside the matrix pattern"))? += delta;
        Ok(k)
    }

    /// `K psi` for a field on the nodes (the on-shell value of `E^2 psi`).
    pub fn apply(&self, nodes: &[Complex64]) -> Vec<Complex64> {
        let mut u = self.closure.gather(nodes);
        for (v, s) in u.iter_mut().zip(&self.sqrt_w) {
            *v *= s;
        }
        let mut y = self.sym.matvec(&u);
        for (v, s) in y.iter_mut().zip(&self.sqrt_w) {
            *v /= s;
        }
        self.closure.scatter(&y)
    }

    /// Discrete `-psi_xx` consistent with the closure.
    pub fn laplacian(&self, nodes: &[Complex64]) -> Vec<Complex64> {
        let u = self.closure.gather(nodes);
        let mut y = self.form.matvec(&u);
        for (v, w) in y.iter_mut().zip(&self.weights) {
            *v /= w;
        }
        self.closure.scatter(&y)
    }

    /// First derivative with closure-consistent end values.
    pub fn derivative(&self, nodes: &[Complex64]) -> Vec<Complex64> {
        let lap = self.laplacian(nodes);
        self.closure.derivative(nodes, &lap)
    }
}
