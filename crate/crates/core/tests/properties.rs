use std::f64::consts::PI;

use kfgm_core::bc::{m_matrix, realize, u2_matrix, BcParams, BcRealization};
use kfgm_core::evolution::{evolve, EvolutionConfig};
use kfgm_core::model::{fv_to_kfg, kfg_to_fv, Grid, KfgState, MajoranaKind, PhysicalUnits, ScalarPotential};
use kfgm_core::observables::{global_summary, local_fields, two_component_fields};
use kfgm_core::operator::{assemble_fv_hamiltonian, assemble_kinetic, KineticMatrix};
use kfgm_core::Complex64;
use nalgebra::Matrix2;
use proptest::prelude::*;

fn sphere(v: [f64; 4], mu: f64) -> Option<BcParams> {
    let r = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if r < 0.1 {
        return None;
    }
    BcParams::new(v[0] / r, v[1] / r, v[2] / r, v[3] / r, mu, 1.0).ok()
}

fn unit() -> impl Strategy<Value = f64> {
    -1.0f64..1.0
}

fn majorana_params() -> impl Strategy<Value = BcParams> {
    (unit(), unit(), unit(), 0.0f64..PI)
        .prop_filter_map("degenerate", |(a, b, c, mu)| sphere([a, b, 0.0, c], mu))
}

fn any_params() -> impl Strategy<Value = BcParams> {
    (unit(), unit(), unit(), unit(), 0.0f64..PI)
        .prop_filter_map("degenerate", |(a, b, c, d, mu)| sphere([a, b, c, d], mu))
}

fn field(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((unit(), unit()).prop_map(|(re, im)| Complex64::new(re, im)), n)
}

fn kinetic(p: &BcParams, n: usize, s: f64) -> Option<KineticMatrix> {
    let g = Grid::new(0.0, 1.0, n).unwrap();
    let bc = realize(p).ok()?;
    assemble_kinetic(&g, &ScalarPotential::constant(s), 0.0, &bc, &PhysicalUnits::default()).ok()
}

fn conforming(k: &KineticMatrix, psi: &[Complex64], psi_t: &[Complex64], kind: MajoranaKind) -> KfgState {
    let c = k.closure();
    let s = KfgState::new(c.project(psi), c.project(psi_t), 0.0, MajoranaKind::None).unwrap();
    if kind == MajoranaKind::None {
        s
    } else {
        kfgm_core::model::majorana_project(&s, kind)
    }
}

fn rel(a: &[Complex64], b: &[Complex64]) -> f64 {
    let d = a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    let s = a.iter().chain(b).map(|x| x.norm()).fold(0.0, f64::max);
    if s == 0.0 {
        d
    } else {
        d / s
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fv_round_trip(psi in field(12), psi_t in field(12), m in 0.2f64..3.0, hbar in 0.2f64..3.0) {
        let units = PhysicalUnits::new(hbar, 1.3, m, 1.0).unwrap();
        let s = KfgState::new(psi, psi_t, 0.5, MajoranaKind::None).unwrap();
        let back = fv_to_kfg(&kfg_to_fv(&s, &units).unwrap(), &units).unwrap();
        prop_assert!(rel(&s.psi, &back.psi) < 1e-14);
        prop_assert!(rel(&s.psi_t, &back.psi_t) < 1e-13);
    }

    #[test]
    fn u2_is_unitary(p in any_params()) {
        let u = u2_matrix(&p).unwrap();
        prop_assert!((u.adjoint() * u - Matrix2::identity()).norm() < 1e-13);
    }

    #[test]
    fn transfer_matrix_is_unimodular(p in majorana_params()) {
        prop_assume!(p.m1.abs() > 0.05);
        let BcRealization::Coupled { m } = m_matrix(&p).unwrap() else { unreachable!() };
        prop_assert!((m.determinant() - 1.0).abs() < 1e-10 / (p.m1 * p.m1));
        let inv = BcParams::new(-p.m0, p.m1, 0.0, -p.m3, PI - p.mu, 1.0).unwrap();
        let BcRealization::Coupled { m: mi } = m_matrix(&inv).unwrap() else { unreachable!() };
        prop_assert!((m * mi - Matrix2::identity()).norm() < 1e-9 / (p.m1 * p.m1));
    }

    #[test]
    fn kinetic_is_hermitian_and_h_pseudo_hermitian(p in any_params(), s in 0.0f64..2.0) {
        if let Some(k) = kinetic(&p, 24, s) {
            let sym = k.symmetric();
            prop_assert!(sym.hermitian_defect() <= 1e-12 * sym.frobenius());
            prop_assert!(assemble_fv_hamiltonian(&k).is_ok());
        }
    }

    #[test]
    fn majorana_states_carry_no_charge(p in majorana_params(), psi in field(24), psi_t in field(24), minus in any::<bool>()) {
        if let Some(k) = kinetic(&p, 24, 0.3) {
            let kind = if minus { MajoranaKind::Minus } else { MajoranaKind::Plus };
            let s = conforming(&k, &psi, &psi_t, kind);
            let f = local_fields(&s, &k).unwrap();
            let scale = f.scale();
            prop_assert!(f.rho.iter().chain(&f.j).all(|v| v.norm() <= 1e-13 * scale));
            prop_assert!(f.rho_e.iter().chain(&f.j_e).all(|v| v.im.abs() <= 1e-13 * scale));
        }
    }

    #[test]
    fn real_densities_are_real(p in any_params(), psi in field(24), psi_t in field(24)) {
        if let Some(k) = kinetic(&p, 24, 0.3) {
            let s = conforming(&k, &psi, &psi_t, MajoranaKind::None);
            let f = local_fields(&s, &k).unwrap();
            prop_assert!(f.t00.iter().chain(&f.ct10).chain(&f.t11).chain(&f.rho_tilde_e).all(|v| v.im == 0.0));
            prop_assert!(rel(&f.t01_check, &f.ct10) < 1e-13);
            let g = global_summary(&s, &k, &p).unwrap();
            prop_assert!(g.energy_mean.im.abs() <= 1e-11 * g.energy_mean.norm().max(1e-300));
        }
    }

    #[test]
    fn one_and_two_component_paths_agree(p in any_params(), psi in field(24), psi_t in field(24)) {
        if let Some(k) = kinetic(&p, 24, 0.3) {
            let s = conforming(&k, &psi, &psi_t, MajoranaKind::None);
            let one = local_fields(&s, &k).unwrap();
            let two = two_component_fields(&kfg_to_fv(&s, k.units()).unwrap(), &k).unwrap();
            prop_assert!(rel(&one.rho, &two.rho) < 1e-11);
            prop_assert!(rel(&one.j, &two.j) < 1e-11);
            prop_assert!(rel(&one.rho_e, &two.rho_e) < 1e-11);
            prop_assert!(rel(&one.j_e, &two.j_e) < 1e-11);
        }
    }

    #[test]
    fn cayley_conserves_metric_and_energy(p in majorana_params(), psi in field(24), psi_t in field(24)) {
        if let Some(k) = kinetic(&p, 24, 0.3) {
            let s = conforming(&k, &psi, &psi_t, MajoranaKind::None);
            let t = evolve(&s, &k, &EvolutionConfig::new(0.01, 50, 10).unwrap()).unwrap();
            prop_assume!(!t.indefinite_spectrum);
            let n0 = t.snapshots[0].norm.abs().max(t.snapshots[0].energy.norm());
            prop_assert!(t.max_norm_drift() <= 1e-11 * n0);
            prop_assert!(t.max_energy_drift() <= 1e-11 * t.snapshots[0].energy.norm().max(n0));
        }
    }
}
