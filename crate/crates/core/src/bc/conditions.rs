use alloc::vec::Vec;
use nalgebra::Matrix2;
use num_traits::Float;

use super::{m_matrix, BcParams, BcRealization, CatalogTag, ALGEBRA_TOL};
use crate::{Error, Result};

/// Residuals behind the boolean flags of a [`BcReport`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConditionValues {
    /// Products that must vanish for the confining tau1 test.
    pub confining_products: Vec<f64>,
    /// `|M^T X M - X|` and `|M^-T X M^-1 - X|` for coupled members.
    pub tau1_defects: Vec<f64>,
    /// Left minus right sides of the energy-condition scalar equations.
    pub energy_residuals: Vec<f64>,
    /// `det M - 1` for coupled members.
    pub det_defect: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BcReport {
    pub majorana_compatible: bool,
    pub confining: bool,
    /// `None` when the member is not Majorana compatible.
    pub tau1_condition: Option<bool>,
    pub energy_condition: Option<bool>,
    pub named_match: Option<CatalogTag>,
    pub values: ConditionValues,
}

fn confining_products(p: &BcParams) -> [f64; 6] {
    let (s, c) = (p.mu.sin(), p.mu.cos());
    [
        (p.m3 + s) * (p.m0 - c),
        (p.m3 - s) * (p.m0 + c),
        (p.m0 - c) * (p.m0 + c),
        (p.m3 + s) * (p.m0 + c),
        (p.m3 - s) * (p.m0 - c),
        (p.m3 - s) * (p.m3 + s),
    ]
}

pub fn check_confining_conditions(p: &BcParams) -> Result<bool> {
    if !p.is_confining() {
        return Err(Error::WrongBranch);
    }
    Ok(confining_products(p).iter().all(|v| v.abs() <= ALGEBRA_TOL))
}

fn tau1_defects(m: &Matrix2<f64>) -> Option<[f64; 2]> {
    let x = Matrix2::new(0.0, 1.0, 1.0, 0.0);
    let inv = m.try_inverse()?;
    Some([
        (m.transpose() * x * m - x).abs().max(),
        (inv.transpose() * x * inv - x).abs().max(),
    ])
}

pub fn check_tau1_condition(real: &BcRealization) -> Result<bool> {
    match real {
        BcRealization::Coupled { m } => Ok(tau1_defects(m).is_some_and(|d| d.iter().all(|&v| v <= ALGEBRA_TOL))),
        _ => Err(Error::WrongBranch),
    }
}

fn energy_residuals(p: &BcParams) -> [f64; 5] {
    let (s, c) = (p.mu.sin(), p.mu.cos());
    let m1sq = p.m1 * p.m1;
    [
        (p.m3 + s) * (p.m0 + c),
        (p.m3 + s) * (p.m3 + s) - m1sq,
        (p.m0 + c) * (p.m0 + c),
        (s - p.m3) * (p.m0 + c),
        (s - p.m3) * (s - p.m3) - m1sq,
    ]
}

pub fn check_energy_condition(p: &BcParams) -> bool {
    energy_residuals(p).iter().all(|v| v.abs() <= ALGEBRA_TOL)
}

pub fn classify(p: &BcParams) -> BcReport {
    let majorana_compatible = p.is_majorana_compatible();
    let confining = p.is_confining();
    let mut values = ConditionValues::default();
    let mut tau1_condition = None;
    let mut energy_condition = None;
    if majorana_compatible {
        energy_condition = Some(check_energy_condition(p));
        values.energy_residuals = energy_residuals(p).to_vec();
        if confining {
            let prods = confining_products(p);
            tau1_condition = Some(prods.iter().all(|v| v.abs() <= ALGEBRA_TOL));
            values.confining_products = prods.to_vec();
        } else if let Ok(BcRealization::Coupled { m }) = m_matrix(p) {
            let d = tau1_defects(&m);
            tau1_condition = Some(d.is_some_and(|d| d.iter().all(|&v| v <= ALGEBRA_TOL)));
            values.tau1_defects = d.map(|d| d.to_vec()).unwrap_or_default();
            values.det_defect = Some(m.determinant() - 1.0);
        }
    }
    BcReport {
        majorana_compatible,
        confining,
        tau1_condition,
        energy_condition,
        named_match: CatalogTag::identify(p),
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bc::ALL_TAGS;
    use core::f64::consts::PI;

    #[test]
    fn catalog_flags() {
        // (majorana, confining, tau1, energy)
        let want = [
            (true, true, Some(true), Some(true)),
            (true, true, Some(true), Some(false)),
            (true, true, Some(true), Some(false)),
            (true, true, Some(true), Some(false)),
            (true, true, Some(false), Some(false)),
            (true, true, Some(false), Some(false)),
            (true, false, Some(true), Some(true)),
            (true, false, Some(true), Some(true)),
            (true, false, Some(false), Some(false)),
            (true, false, Some(false), Some(false)),
            (false, false, None, None),
            (false, false, None, None),
        ];
        for (t, w) in ALL_TAGS.iter().zip(want) {
            let r = classify(&t.params(1.0));
            assert_eq!((r.majorana_compatible, r.confining, r.tau1_condition, r.energy_condition), w, "{t}");
            assert_eq!(r.named_match, Some(*t));
        }
    }

    #[test]
    fn confining_branch_guard() {
        let per = CatalogTag::Periodic.params(1.0);
        assert_eq!(check_confining_conditions(&per), Err(Error::WrongBranch));
        assert!(check_confining_conditions(&CatalogTag::MixedA0.params(1.0)).unwrap());
        assert!(!check_confining_conditions(&CatalogTag::RobinMitPlus.params(1.0)).unwrap());
    }

    #[test]
    fn tau1_on_rotations() {
        let id = BcRealization::Coupled { m: Matrix2::identity() };
        assert!(check_tau1_condition(&id).unwrap());
        assert!(check_tau1_condition(&BcRealization::Coupled { m: -Matrix2::identity() }).unwrap());
        let rot = m_matrix(&CatalogTag::MixedX { plus: true }.params(1.0)).unwrap();
        assert!(!check_tau1_condition(&rot).unwrap());
        let sep = m_matrix(&CatalogTag::Dirichlet.params(1.0)).unwrap();
        assert_eq!(check_tau1_condition(&sep), Err(Error::WrongBranch));
    }

    #[test]
    fn lambda_does_not_change_flags() {
        for t in ALL_TAGS {
            let a = classify(&t.params(1.0));
            let b = classify(&t.params(3.7));
            assert_eq!(
                (a.majorana_compatible, a.confining, a.tau1_condition, a.energy_condition),
                (b.majorana_compatible, b.confining, b.tau1_condition, b.energy_condition)
            );
        }
        let r = classify(&BcParams::new(0.0, 1.0, 0.0, 0.0, 0.3 * PI, 1.0).unwrap());
        assert!(r.values.det_defect.unwrap().abs() < 1e-14);
    }
}
