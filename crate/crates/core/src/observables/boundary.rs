use num_complex::Complex64;
use num_traits::Float;

use super::fields::{fields_from_jet, Jet};
use crate::bc::{BcParams, ALGEBRA_TOL};
use crate::model::KfgState;
use crate::operator::KineticMatrix;
use crate::Result;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// End values of a current: stencil values at both ends and, where the
/// parameters allow, the closed-form value at `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndValues {
    pub a: Complex64,
    pub b: Complex64,
    pub formula_a: Option<Complex64>,
}

impl EndValues {
    pub fn jump(&self) -> Complex64 {
        self.b - self.a
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JTildeEnds {
    pub a: f64,
    pub b: f64,
    /// `value(b) - value(a)`
    pub difference: f64,
}

struct Ends {
    jet: Jet,
    last: usize,
}

fn ends(state: &KfgState, k: &KineticMatrix) -> Result<Ends> {
    let jet = Jet::new(state, k)?;
    let last = jet.psi.len() - 1;
    Ok(Ends { jet, last })
}

fn denominator(p: &BcParams) -> Option<f64> {
    let d = p.m0 + p.mu.cos();
    (d.abs() > ALGEBRA_TOL).then_some(d)
}

/// Charge current at both ends.
pub fn boundary_j(state: &KfgState, k: &KineticMatrix, params: &BcParams) -> Result<EndValues> {
    let u = *k.units();
    let e = ends(state, k)?;
    let j = |i: usize| Complex64::new(u.hbar / u.mass * (e.jet.psi[i].conj() * e.jet.dpsi[i]).im, 0.0);
    let formula_a = denominator(params).map(|d| {
        let z = Complex64::new(params.m1, params.m2);
        let v = z / d * e.jet.psi[0].conj() * e.jet.psi[e.last];
        Complex64::new(-u.hbar / (u.mass * params.lambda) * v.im, 0.0)
    });
    Ok(EndValues { a: j(0), b: j(e.last), formula_a })
}

/// Energy current `j_E` at both ends.
pub fn boundary_j_e(state: &KfgState, k: &KineticMatrix, params: &BcParams) -> Result<EndValues> {
    let u = *k.units();
    let e = ends(state, k)?;
    let f = fields_from_jet(&e.jet, &u, state.t);
    let formula_a = denominator(params).filter(|_| params.m1.abs() > ALGEBRA_TOL).map(|d| {
        let ea = I * u.hbar * e.jet.psi_t[0];
        let eb = I * u.hbar * e.jet.psi_t[e.last];
        let pre = I * u.hbar / (2.0 * u.mass * params.lambda) * (params.m1 / d);
        pre * (e.jet.psi[0].conj() * eb - e.jet.psi[e.last].conj() * ea)
    });
    let formula_a = formula_a.or_else(|| params.is_confining().then_some(Complex64::new(0.0, 0.0)));
    Ok(EndValues { a: f.j_e[0], b: f.j_e[e.last], formula_a })
}

/// The real energy current `c T^1_0` at both ends.
pub fn boundary_jtilde_e(state: &KfgState, k: &KineticMatrix) -> Result<JTildeEnds> {
    let e = ends(state, k)?;
    let f = fields_from_jet(&e.jet, k.units(), state.t);
    let (a, b) = (f.ct10[0].re, f.ct10[e.last].re);
    Ok(JTildeEnds { a, b, difference: b - a })
}

/// `(E j) / 2` at both ends.
pub fn boundary_ej(state: &KfgState, k: &KineticMatrix, params: &BcParams) -> Result<EndValues> {
    let u = *k.units();
    let e = ends(state, k)?;
    let jt = &e.jet;
    // E j / 2 = (i hbar / 2) (hbar / m) Im(psi_t* psi_x + psi* psi_xt)
    let direct = |i: usize| {
        let v = (jt.psi_t[i].conj() * jt.dpsi[i] + jt.psi[i].conj() * jt.dpsi_t[i]).im;
        I * (0.5 * u.hbar * u.hbar / u.mass * v)
    };
    let formula_a = denominator(params).map(|d| {
        let ea = I * u.hbar * jt.psi_t[0];
        let eb = I * u.hbar * jt.psi_t[e.last];
        // E acting on psi* is -(E psi)*
        let v = -ea.conj() * jt.psi[e.last] + jt.psi[0].conj() * eb;
        I * u.hbar / (2.0 * u.mass * params.lambda) * (params.m1 / d) * v.re
    });
    Ok(EndValues { a: direct(0), b: direct(e.last), formula_a })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bc::{realize, CatalogTag};
    use crate::model::{Grid, MajoranaKind, PhysicalUnits, ScalarPotential};
    use crate::operator::{assemble_kinetic, eigenmodes, synthesize_state, ModeCoefficient};

    fn setup(tag: CatalogTag, n: usize, kind: MajoranaKind, pair: (usize, usize)) -> (KineticMatrix, KfgState, BcParams) {
        let p = tag.params(1.0);
        let g = Grid::new(0.0, 1.0, n).unwrap();
        let k = assemble_kinetic(&g, &ScalarPotential::constant(0.1), 0.0, &realize(&p).unwrap(), &PhysicalUnits::default())
            .unwrap();
        let m = eigenmodes(&k).unwrap();
        let cs = [ModeCoefficient::new(pair.0, 1.0, 0.3), ModeCoefficient::new(pair.1, 0.6, 1.3)];
        let s = synthesize_state(&m, &cs, 0.41, kind, 1.0).unwrap();
        (k, s, p)
    }

    #[test]
    fn charge_current_periodic_complex() {
        let (k, s, p) = setup(CatalogTag::Periodic, 128, MajoranaKind::None, (1, 4));
        let j = boundary_j(&s, &k, &p).unwrap();
        assert!(j.a.norm() > 1e-3);
        assert!((j.a - j.b).norm() < 1e-3 * j.a.norm());
        assert!(j.formula_a.is_none());
        let (k, s, p) = setup(CatalogTag::Rotation { plus: true, mu: 0.7 }, 128, MajoranaKind::None, (1, 4));
        let j = boundary_j(&s, &k, &p).unwrap();
        assert!(j.a.norm() > 1e-3);
        assert!((j.formula_a.unwrap() - j.a).norm() < 1e-3 * j.a.norm());
    }

    #[test]
    fn charge_current_dirichlet_and_majorana() {
        let (k, s, p) = setup(CatalogTag::Dirichlet, 64, MajoranaKind::None, (1, 4));
        let j = boundary_j(&s, &k, &p).unwrap();
        assert!(j.a.norm() < 1e-13 && j.b.norm() < 1e-13);
        let (k, s, p) = setup(CatalogTag::MixedX { plus: true }, 64, MajoranaKind::Plus, (1, 4));
        let j = boundary_j(&s, &k, &p).unwrap();
        assert_eq!((j.a.norm(), j.b.norm()), (0.0, 0.0));
    }

    #[test]
    fn energy_current_confining_and_permeable() {
        let (k, s, p) = setup(CatalogTag::RobinMitPlus, 256, MajoranaKind::Plus, (1, 4));
        let je = boundary_j_e(&s, &k, &p).unwrap();
        assert!(je.a.norm() < 1e-8 && je.b.norm() < 1e-8);
        let (k, s, p) = setup(CatalogTag::Rotation { plus: true, mu: 0.0 }, 256, MajoranaKind::Plus, (1, 4));
        let je = boundary_j_e(&s, &k, &p).unwrap();
        assert!(je.a.norm() > 1e-3);
        assert!((je.a - je.b).norm() < 1e-6 * je.a.norm().max(1.0));
        assert!((je.formula_a.unwrap() - je.a).norm() < 1e-3 * je.a.norm());
    }

    #[test]
    fn stationary_mode_has_no_energy_current() {
        let p = CatalogTag::Periodic.params(1.0);
        let g = Grid::new(0.0, 1.0, 64).unwrap();
        let k = assemble_kinetic(&g, &ScalarPotential::zero(), 0.0, &realize(&p).unwrap(), &PhysicalUnits::default())
            .unwrap();
        let m = eigenmodes(&k).unwrap();
        let s = synthesize_state(&m, &[ModeCoefficient::new(2, 1.0, 0.0)], 0.2, MajoranaKind::Plus, 1.0).unwrap();
        let je = boundary_j_e(&s, &k, &p).unwrap();
        assert!(je.a.norm() < 1e-10 && je.b.norm() < 1e-10);
    }

    #[test]
    fn energy_tilde_ends() {
        let (k, s, _) = setup(CatalogTag::Dirichlet, 128, MajoranaKind::Plus, (1, 4));
        let t = boundary_jtilde_e(&s, &k).unwrap();
        assert!(t.a.abs() < 1e-12 && t.b.abs() < 1e-12);
        let (k, s, _) = setup(CatalogTag::RobinMitPlus, 128, MajoranaKind::Plus, (1, 4));
        let t = boundary_jtilde_e(&s, &k).unwrap();
        assert!(t.a.abs() > 1e-3 && t.b.abs() > 1e-3 && t.difference.abs() > 1e-3);
        let (k, s, _) = setup(CatalogTag::Periodic, 128, MajoranaKind::Plus, (1, 4));
        let t = boundary_jtilde_e(&s, &k).unwrap();
        assert!(t.a.abs() > 1e-3 && t.difference.abs() < 1e-6 * t.a.abs());
    }

    #[test]
    fn half_e_j() {
        let (k, s, p) = setup(CatalogTag::Rotation { plus: true, mu: 0.0 }, 128, MajoranaKind::Minus, (1, 4));
        let v = boundary_ej(&s, &k, &p).unwrap();
        assert!(v.a.norm() < 1e-12 && v.b.norm() < 1e-12);
        let (k, s, p) = setup(CatalogTag::Rotation { plus: false, mu: 0.7 }, 128, MajoranaKind::None, (1, 4));
        let v = boundary_ej(&s, &k, &p).unwrap();
        assert!(v.a.norm() > 1e-3);
        assert!((v.a - v.b).norm() < 1e-3 * v.a.norm());
        assert!((v.formula_a.unwrap() - v.a).norm() < 1e-3 * v.a.norm());
        let z = KfgState::zeros(128, 0.0);
        let v = boundary_ej(&z, &k, &p).unwrap();
        assert_eq!((v.a.norm(), v.formula_a.unwrap().norm()), (0.0, 0.0));
    }
}
