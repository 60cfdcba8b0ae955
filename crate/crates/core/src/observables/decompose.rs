use alloc::vec::Vec;
use num_complex::Complex64;

use super::fields::{fields_from_jet, Jet};
use crate::model::{KfgState, MajoranaKind};
use crate::operator::KineticMatrix;
use crate::Result;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Largest pointwise residual of each rewriting of the energy density and
/// energy current. Forms with a spatial gradient are checked on interior
/// nodes with centered differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecompositionResiduals {
    /// `rho_E = -(i/2mc^2) E[Im(psi* E psi)] + E rho / 2 + rho~_E`
    pub energy_density_time: f64,
    /// `rho_E = (i/2mc^2) cp[Im(psi* cp psi)] + E rho / 2 + T00`
    pub energy_density_space: f64,
    /// `j_E = (i/2mc) E[Im(psi* cp psi)] + E j / 2 + j~_E`
    pub energy_current_time: f64,
    /// `j_E = (i/2mc) cp[Im(psi* E psi)] + E j / 2 + j~_E`
    pub energy_current_space: f64,
    /// `j_E = (hbar/2m) d_x Im(psi* E psi) + j~_E`, only for Majorana states.
    pub majorana_current: Option<f64>,
    pub scale: f64,
}

fn centered(v: &[f64], dx: f64, i: usize) -> f64 {
    (v[i + 1] - v[i - 1]) / (2.0 * dx)
}

/// Residuals of the density decompositions for an on-shell state.
///
/// Time derivatives are eliminated with the field equation
/// (`psi_tt = -K psi / hbar^2`), so the time forms are exact identities.
pub fn decomposition_checks(state: &KfgState, k: &KineticMatrix) -> Result<DecompositionResiduals> {
    let jet = Jet::new(state, k)?;
    let u = *k.units();
    let (hbar, m, c, mc2) = (u.hbar, u.mass, u.c, u.mc2());
    let f = fields_from_jet(&jet, &u, state.t);
    let n = jet.psi.len();
    let dx = k.grid().dx();
    let ih = I * hbar;

    let mut im_pe = Vec::with_capacity(n);
    let mut im_pcp = Vec::with_capacity(n);
    let mut e_rho = Vec::with_capacity(n);
    let mut e_j = Vec::with_capacity(n);
    let mut r28 = 0.0f64;
    let mut r32 = 0.0f64;
    for i in 0..n {
        let q = jet.point(i, &u);
        let p_t = jet.psi_t[i];
        let e_t = ih * (-q.e2 / (hbar * hbar));
        let cp_t = -ih * c * jet.dpsi_t[i];
        let pc = q.p.conj();
        im_pe.push((pc * q.e).im);
        im_pcp.push((pc * q.cp).im);
        let er = ih * (p_t.conj() * q.e + pc * e_t + e_t.conj() * q.p + q.e.conj() * p_t) / (2.0 * mc2);
        let ej = ih * (p_t.conj() * q.cp + pc * cp_t + cp_t.conj() * q.p + q.cp.conj() * p_t) / (2.0 * m * c);
        e_rho.push(er);
        e_j.push(ej);
        let e_im_pe = ih * (p_t.conj() * q.e + pc * e_t).im;
        let e_im_pcp = ih * (p_t.conj() * q.cp + pc * cp_t).im;
        let lhs28 = -I / (2.0 * mc2) * e_im_pe + 0.5 * er + f.rho_tilde_e[i];
        let lhs32 = I / (2.0 * m * c) * e_im_pcp + 0.5 * ej + f.ct10[i];
        r28 = r28.max((f.rho_e[i] - lhs28).norm());
        r32 = r32.max((f.j_e[i] - lhs32).norm());
    }

    let mut r30 = 0.0f64;
    let mut r71 = 0.0f64;
    let mut r72 = 0.0f64;
    let cp_of = |v: f64| -ih * c * v;
    for i in 1..n - 1 {
        let g_pcp = centered(&im_pcp, dx, i);
        let g_pe = centered(&im_pe, dx, i);
        let lhs30 = I / (2.0 * mc2) * cp_of(g_pcp) + 0.5 * e_rho[i] + f.t00[i];
        let lhs71 = I / (2.0 * m * c) * cp_of(g_pe) + 0.5 * e_j[i] + f.ct10[i];
        let lhs72 = hbar / (2.0 * m) * g_pe + f.ct10[i];
        r30 = r30.max((f.rho_e[i] - lhs30).norm());
        r71 = r71.max((f.j_e[i] - lhs71).norm());
        r72 = r72.max((f.j_e[i] - lhs72).norm());
    }
    Ok(DecompositionResiduals {
        energy_density_time: r28,
        energy_density_space: r30,
        energy_current_time: r32,
        energy_current_space: r71,
        majorana_current: (state.kind != MajoranaKind::None).then_some(r72),
        scale: f.scale(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bc::{realize, CatalogTag};
    use crate::model::{Grid, PhysicalUnits, ScalarPotential, SpatialProfile, TimeFactor};
    use crate::operator::{assemble_kinetic, eigenmodes, synthesize_state, ModeCoefficient};

    fn run(tag: CatalogTag, n: usize, kind: MajoranaKind) -> DecompositionResiduals {
        let g = Grid::new(0.0, 1.0, n).unwrap();
        let pot = ScalarPotential::new(SpatialProfile::Quadratic { s0: 0.1, s2: 2.0, x0: 0.5 }, TimeFactor::Constant, true)
            .unwrap();
        let k = assemble_kinetic(&g, &pot, 0.0, &realize(&tag.params(1.0)).unwrap(), &PhysicalUnits::default()).unwrap();
        let m = eigenmodes(&k).unwrap();
        let cs = [ModeCoefficient::new(0, 1.0, 0.3), ModeCoefficient::new(2, 0.6, 1.3)];
        let s = synthesize_state(&m, &cs, 0.2, kind, 1.0).unwrap();
        decomposition_checks(&s, &k).unwrap()
    }

    #[test]
    fn time_forms_are_exact() {
        for kind in [MajoranaKind::Plus, MajoranaKind::Minus, MajoranaKind::None] {
            let r = run(CatalogTag::RobinMitMinus, 64, kind);
            assert!(r.energy_density_time <= 1e-12 * r.scale, "{kind:?} {r:?}");
            assert!(r.energy_current_time <= 1e-12 * r.scale, "{kind:?} {r:?}");
        }
    }

    #[test]
    fn gradient_forms_converge() {
        for kind in [MajoranaKind::Plus, MajoranaKind::None] {
            let a = run(CatalogTag::Periodic, 65, kind);
            let b = run(CatalogTag::Periodic, 129, kind);
            for (x, y) in [
                (a.energy_density_space, b.energy_density_space),
                (a.energy_current_space, b.energy_current_space),
            ] {
                assert!(x / y > 3.5 && x / y < 4.5, "{kind:?} {x} {y}");
            }
            if kind != MajoranaKind::None {
                let (x, y) = (a.majorana_current.unwrap(), b.majorana_current.unwrap());
                assert!(x / y > 3.5 && x / y < 4.5);
            } else {
                assert!(a.majorana_current.is_none());
            }
        }
    }

    #[test]
    fn real_state_dirichlet() {
        let a = run(CatalogTag::Dirichlet, 128, MajoranaKind::Plus);
        let b = run(CatalogTag::Dirichlet, 256, MajoranaKind::Plus);
        assert!(a.energy_density_space / b.energy_density_space > 3.5);
        assert!(b.energy_density_space < 1e-3 * b.scale);
        assert!(b.majorana_current.unwrap() < 1e-4 * b.scale);
    }
}
