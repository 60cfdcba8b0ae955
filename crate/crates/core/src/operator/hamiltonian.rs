use alloc::vec::Vec;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Float;

use super::KineticMatrix;
use crate::{Error, Result};

pub const PSEUDO_HERMITIAN_TOL: f64 = 1e-10;

/// Feshbach-Villars Hamiltonian on the grid,
/// `h = A (tau3 + i tau2) + mc^2 tau3` with `A = (K - (mc^2)^2) / 2mc^2`.
///
/// Unknown ordering is `(psi1 unknowns, psi2 unknowns)` in the symmetrized basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteHamiltonian {
    kinetic: KineticMatrix,
}

pub fn assemble_fv_hamiltonian(kinetic: &KineticMatrix) -> Result<DiscreteHamiltonian> {
    let h = DiscreteHamiltonian { kinetic: kinetic.clone() };
    let defect = h.pseudo_hermiticity_defect();
    if !(defect <= PSEUDO_HERMITIAN_TOL * h.frobenius()) {
        return Err(Error::ClosureNotSelfAdjoint { defect });
    }
    Ok(h)
}

impl DiscreteHamiltonian {
    pub fn kinetic(&self) -> &KineticMatrix {
        &self.kinetic
    }

    pub fn dim(&self) -> usize {
        2 * self.kinetic.n_dof()
    }

    fn a_entry(&self, i: usize, j: usize) -> Complex64 {
        let mc2 = self.kinetic.units().mc2();
        let mut v = self.kinetic.symmetric().get(i, j);
        if i == j {
            v -= mc2 * mc2;
        }
        v / (2.0 * mc2)
    }

    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        let n = self.kinetic.n_dof();
        let mc2 = self.kinetic.units().mc2();
        let (br, i) = (r / n, r % n);
        let (bc, j) = (c / n, c % n);
        let a = self.a_entry(i, j);
        let rest = if i == j { mc2 } else { 0.0 };
        match (br, bc) {
            (0, 0) => a + rest,
            (0, 1) => a,
            (1, 0) => -a,
            _ => -a - rest,
        }
    }

    fn positions(&self) -> Vec<(usize, usize)> {
        let n = self.kinetic.n_dof();
        let pat = self.kinetic.symmetric().pattern();
        let mut out = Vec::with_capacity(4 * pat.len());
        for br in 0..2 {
            for bc in 0..2 {
                out.extend(pat.iter().map(|&(i, j)| (br * n + i, bc * n + j)));
            }
        }
        out
    }

    /// Frobenius norm of `tau3 h^H tau3 - h`, evaluated entrywise.
    pub fn pseudo_hermiticity_defect(&self) -> f64 {
        let n = self.kinetic.n_dof();
        let s = |k: usize| if k < n { 1.0 } else { -1.0 };
        self.positions()
            .into_iter()
            .map(|(r, c)| (s(r) * s(c) * self.entry(c, r).conj() - self.entry(r, c)).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn frobenius(&self) -> f64 {
        self.positions().into_iter().map(|(r, c)| self.entry(r, c).norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let d = self.dim();
        let mut m = DMatrix::from_element(d, d, Complex64::new(0.0, 0.0));
        for (r, c) in self.positions() {
            m[(r, c)] = self.entry(r, c);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bc::{realize, CatalogTag};
    use crate::model::{Grid, PhysicalUnits, ScalarPotential};
    use crate::operator::assemble_kinetic;

    fn kin(tag: CatalogTag, n: usize) -> KineticMatrix {
        let g = Grid::new(0.0, 1.0, n).unwrap();
        let bc = realize(&tag.params(1.0)).unwrap();
        assemble_kinetic(&g, &ScalarPotential::constant(0.2), 0.0, &bc, &PhysicalUnits::default()).unwrap()
    }

    #[test]
    fn dirichlet_passes_tightly() {
        let h = assemble_fv_hamiltonian(&kin(CatalogTag::Dirichlet, 64)).unwrap();
        assert!(h.pseudo_hermiticity_defect() <= 1e-14 * h.frobenius());
    }

    #[test]
    fn dense_check_agrees() {
        let h = assemble_fv_hamiltonian(&kin(CatalogTag::Quasimixed { plus: false }, 12)).unwrap();
        let m = h.to_dense();
        let n = h.dim();
        let t3 = DMatrix::from_fn(n, n, |i, j| {
            Complex64::new(if i != j { 0.0 } else if i < n / 2 { 1.0 } else { -1.0 }, 0.0)
        });
        let d = (&t3 * m.adjoint() * &t3 - &m).norm();
        assert!(d <= 1e-12 * m.norm());
    }

    #[test]
    fn corner_perturbation_breaks_the_check_linearly() {
        let k = kin(CatalogTag::Periodic, 32);
        let last = k.n_dof() - 1;
        for eps in [1e-3, 1e-1] {
            let bad = k.with_entry_offset(0, last, Complex64::new(eps, 0.0)).unwrap();
            let h = DiscreteHamiltonian { kinetic: bad.clone() };
            let d = h.pseudo_hermiticity_defect();
            // four blocks, each carrying eps / 2mc^2 on both mirrored slots
            assert!((d - 2.0 * eps / 2.0 * 2f64.sqrt()).abs() < 1e-9 * eps.max(1.0), "{d}");
            assert!(matches!(assemble_fv_hamiltonian(&bad), Err(Error::ClosureNotSelfAdjoint { .. })));
        }
    }
}
