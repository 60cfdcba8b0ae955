use alloc::vec::Vec;
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use num_traits::Float;

use super::KineticMatrix;
use crate::model::{KfgState, MajoranaKind};
use crate::{Error, Result};

const EIGEN_EPS: f64 = 1e-15;
const EIGEN_ITERS: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct Mode {
    /// Position in the full ascending spectrum.
    pub index: usize,
    pub energy: f64,
    pub energy_sq: f64,
    /// Node values, orthonormal under the trapezoid weights.
    pub field: Vec<Complex64>,
}

/// Eigenvalue of `K` with `E^2 <= 0`, kept out of mode synthesis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralDiagnostic {
    pub index: usize,
    pub energy_sq: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeSet {
    pub modes: Vec<Mode>,
    pub diagnostics: Vec<SpectralDiagnostic>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeCoefficient {
    /// Index into `ModeSet::modes`.
    pub index: usize,
    pub amplitude: f64,
    pub phase: f64,
}

impl ModeCoefficient {
    pub fn new(index: usize, amplitude: f64, phase: f64) -> Self {
        Self { index, amplitude, phase }
    }
}

fn real_dense(k: &KineticMatrix) -> DMatrix<f64> {
    k.symmetric().to_dense().map(|v| v.re)
}

/// Ascending eigenvalues `E^2` of `K`.
pub fn spectrum(k: &KineticMatrix) -> Result<Vec<f64>> {
    let mut vals: Vec<f64> = if k.is_real() {
        let m = real_dense(k);
        SymmetricEigen::try_new(m, EIGEN_EPS, EIGEN_ITERS)
            .ok_or(Error::NumericalFailure("eigensolver did not converge"))?
            .eigenvalues
            .iter()
            .copied()
            .collect()
    } else {
        SymmetricEigen::try_new(k.symmetric().to_dense(), EIGEN_EPS, EIGEN_ITERS)
            .ok_or(Error::NumericalFailure("eigensolver did not converge"))?
            .eigenvalues
            .iter()
            .copied()
            .collect()
    };
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

pub fn eigenmodes(k: &KineticMatrix) -> Result<ModeSet> {
    let (vals, vecs): (Vec<f64>, DMatrix<Complex64>) = if k.is_real() {
        let e = SymmetricEigen::try_new(real_dense(k), EIGEN_EPS, EIGEN_ITERS)
            .ok_or(Error::NumericalFailure("eigensolver did not converge"))?;
        (e.eigenvalues.iter().copied().collect(), e.eigenvectors.map(|v| Complex64::new(v, 0.0)))
    } else {
        let e = SymmetricEigen::try_new(k.symmetric().to_dense(), EIGEN_EPS, EIGEN_ITERS)
            .ok_or(Error::NumericalFailure("eigensolver did not converge"))?;
        (e.eigenvalues.iter().copied().collect(), e.eigenvectors)
    };
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
    let closure = k.closure();
    let mut out = ModeSet { modes: Vec::new(), diagnostics: Vec::new() };
    for (index, &col) in order.iter().enumerate() {
        let e2 = vals[col];
        if !(e2 > 0.0) {
            out.diagnostics.push(SpectralDiagnostic { index, energy_sq: e2 });
            continue;
        }
        let mut dof: Vec<Complex64> =
            vecs.column(col).iter().zip(k.sqrt_weights()).map(|(v, s)| v / s).collect();
        // fix the arbitrary phase: largest entry (first on ties) made real positive
        let big = dof.iter().fold(0.0_f64, |m, v| m.max(v.norm()));
        if let Some(p) = dof.iter().find(|v| v.norm() > 0.5 * big).copied() {
            let ph = p.conj() / p.norm();
            for v in &mut dof {
                *v *= ph;
            }
        }
        out.modes.push(Mode { index, energy: e2.sqrt(), energy_sq: e2, field: closure.scatter(&dof) });
    }
    Ok(out)
}

/// Superposes modes analytically at time `t`:
/// real kinds use `A cos(E t/hbar + phi) u`, `None` uses `A exp(-i(E t/hbar + phi)) u`.
pub fn synthesize_state(
    modes: &ModeSet,
    coefficients: &[ModeCoefficient],
    t: f64,
    kind: MajoranaKind,
    hbar: f64,
) -> Result<KfgState> {
    let n = modes.modes.first().map_or(0, |m| m.field.len());
    if n == 0 {
        return Err(Error::InvalidMode { index: 0, count: 0 });
    }
    let zero = Complex64::new(0.0, 0.0);
    let mut psi = alloc::vec![zero; n];
    let mut psi_t = alloc::vec![zero; n];
    for c in coefficients {
        let m = modes
            .modes
            .get(c.index)
            .ok_or(Error::InvalidMode { index: c.index, count: modes.modes.len() })?;
        let w = m.energy / hbar;
        let th = w * t + c.phase;
        let (a, at) = match kind {
            MajoranaKind::Plus | MajoranaKind::Minus => {
                if m.field.iter().any(|v| v.im != 0.0) {
                    return Err(Error::NotMajoranaCompatible);
                }
                let unit = if kind == MajoranaKind::Plus { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 1.0) };
                (unit * (c.amplitude * th.cos()), unit * (-c.amplitude * w * th.sin()))
            }
            MajoranaKind::None => {
                let e = Complex64::new(th.cos(), -th.sin()) * c.amplitude;
                (e, e * Complex64::new(0.0, -w))
            }
        };
        for i in 0..n {
            psi[i] += a * m.field[i];
            psi_t[i] += at * m.field[i];
        }
    }
    Ok(KfgState { psi, psi_t, t, kind })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bc::{realize, CatalogTag};
    use crate::model::{Grid, PhysicalUnits, ScalarPotential};
    use crate::operator::assemble_kinetic;
    use core::f64::consts::PI;

    fn kin(tag: CatalogTag, n: usize, len: f64, s: f64) -> KineticMatrix {
        let g = Grid::new(0.0, len, n).unwrap();
        let bc = realize(&tag.params(1.0)).unwrap();
        assemble_kinetic(&g, &ScalarPotential::constant(s), 0.0, &bc, &PhysicalUnits::default()).unwrap()
    }

    #[test]
    fn dirichlet_dispersion() {
        let m = eigenmodes(&kin(CatalogTag::Dirichlet, 256, PI, 0.0)).unwrap();
        for k in 1..=5 {
            let exact = (1.0 + (k * k) as f64).sqrt();
            assert!((m.modes[k - 1].energy - exact).abs() < 5e-3 * exact);
        }
    }

    #[test]
    fn neumann_constant_mode_and_periodic_pair() {
        let s = spectrum(&kin(CatalogTag::Neumann, 64, 1.0, 0.0)).unwrap();
        assert!((s[0] - 1.0).abs() < 1e-10);
        let p = spectrum(&kin(CatalogTag::Periodic, 257, 2.0 * PI, 0.0)).unwrap();
        assert!((p[1] - 2.0).abs() < 1e-3 && (p[2] - 2.0).abs() < 1e-3);
        assert!((p[1] - p[2]).abs() < 1e-10);
    }

    #[test]
    fn orthonormal_and_residual() {
        let k = kin(CatalogTag::MixedX { plus: true }, 40, 1.0, 0.1);
        let m = eigenmodes(&k).unwrap();
        let w = k.grid().weights();
        let kn = k.symmetric().frobenius();
        for a in m.modes.iter().take(6) {
            let r = k.apply(&a.field);
            for (ri, ui) in r.iter().zip(&a.field) {
                assert!((ri - a.energy_sq * ui).norm() <= 1e-8 * kn);
            }
            for b in m.modes.iter().take(6) {
                let ip: Complex64 = a.field.iter().zip(&b.field).zip(&w).map(|((x, y), w)| x.conj() * y * w).sum();
                let want = if a.index == b.index { 1.0 } else { 0.0 };
                assert!((ip - want).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn constant_potential_shift() {
        let a = spectrum(&kin(CatalogTag::RobinMitMinus, 30, 1.0, 0.0)).unwrap();
        let b = spectrum(&kin(CatalogTag::RobinMitMinus, 30, 1.0, 0.4)).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((y - x - 0.8).abs() < 1e-10);
        }
    }

    #[test]
    fn robin_minus_reports_diagnostics() {
        // psi + psi_x = 0 at a, psi - psi_x = 0 at b admits an e^{-x}-like bound state
        let m = eigenmodes(&kin(CatalogTag::RobinMitMinus, 200, 8.0, 0.0)).unwrap();
        assert!(!m.diagnostics.is_empty());
        assert!(m.modes.iter().all(|x| x.energy_sq > 0.0));
    }

    #[test]
    fn synthesis_basics() {
        let k = kin(CatalogTag::Dirichlet, 32, 1.0, 0.0);
        let m = eigenmodes(&k).unwrap();
        let s0 = synthesize_state(&m, &[ModeCoefficient::new(0, 1.0, 0.0)], 0.0, MajoranaKind::Plus, 1.0).unwrap();
        assert_eq!(s0.psi, m.modes[0].field);
        assert!(s0.psi_t.iter().all(|v| v.norm() == 0.0));
        let period = 2.0 * PI / m.modes[0].energy;
        let s1 = synthesize_state(&m, &[ModeCoefficient::new(0, 1.0, 0.0)], period, MajoranaKind::Plus, 1.0).unwrap();
        for (a, b) in s0.psi.iter().zip(&s1.psi) {
            assert!((a - b).norm() < 1e-12);
        }
        let bad = synthesize_state(&m, &[ModeCoefficient::new(99, 1.0, 0.0)], 0.0, MajoranaKind::Plus, 1.0);
        assert!(matches!(bad, Err(Error::InvalidMode { index: 99, .. })));
    }
}
