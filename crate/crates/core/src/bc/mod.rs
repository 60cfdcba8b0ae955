//! The U(2) boundary-condition family, its Majorana restriction and the
//! named catalog.

mod catalog;
mod conditions;
mod enumerate;
mod realization;

pub use catalog::{CatalogTag, ALL_TAGS};
pub use conditions::{
    check_confining_conditions, check_energy_condition, check_tau1_condition, classify, BcReport,
    ConditionValues,
};
pub use enumerate::{enumerate_confining_solutions, enumerate_energy_slice, ConfiningPoint};
pub use realization::{m_matrix, realize, BcRealization, RobinEnd};

use core::f64::consts::PI;

use nalgebra::Matrix2;
use num_complex::Complex64;
use num_traits::Float;

use crate::{Error, Result};

pub const ALGEBRA_TOL: f64 = 1e-10;
pub const NORM_TOL: f64 = 1e-12;

/// A point `(m0, m1, m2, m3, mu)` of the family together with the length `lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BcParams {
    pub m0: f64,
    pub m1: f64,
    pub m2: f64,
    pub m3: f64,
    pub mu: f64,
    pub lambda: f64,
}

impl BcParams {
    /// Validates the unit norm and folds `mu` into `[0, pi)`.
    pub fn new(m0: f64, m1: f64, m2: f64, m3: f64, mu: f64, lambda: f64) -> Result<Self> {
        let vals = [m0, m1, m2, m3, mu, lambda];
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("non-finite component"));
        }
        if lambda <= 0.0 {
            return Err(Error::InvalidParams("lambda must be positive"));
        }
        let norm = m0 * m0 + m1 * m1 + m2 * m2 + m3 * m3;
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidParams("m0^2+m1^2+m2^2+m3^2 must equal 1"));
        }
        let turns = (mu / PI).floor();
        let mut p = Self { m0, m1, m2, m3, mu: mu - turns * PI, lambda };
        if p.mu >= PI {
            p.mu -= PI;
        }
        // exp(i(mu - k pi)) = (-1)^k exp(i mu)
        if (turns as i64) % 2 != 0 {
            p.m0 = -p.m0;
            p.m1 = -p.m1;
            p.m2 = -p.m2;
            p.m3 = -p.m3;
        }
        Ok(p)
    }

    pub fn with_lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn is_majorana_compatible(&self) -> bool {
        self.m2.abs() <= NORM_TOL
    }

    pub fn is_confining(&self) -> bool {
        self.m1.abs() <= ALGEBRA_TOL && self.m2.abs() <= ALGEBRA_TOL
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        [
            self.m0 - other.m0,
            self.m1 - other.m1,
            self.m2 - other.m2,
            self.m3 - other.m3,
            self.mu - other.mu,
        ]
        .iter()
        .all(|d| d.abs() <= tol)
    }
}

pub fn u2_matrix(p: &BcParams) -> Result<Matrix2<Complex64>> {
    let norm = p.m0 * p.m0 + p.m1 * p.m1 + p.m2 * p.m2 + p.m3 * p.m3;
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(Error::InvalidParams("m0^2+m1^2+m2^2+m3^2 must equal 1"));
    }
    let ph = Complex64::new(p.mu.cos(), p.mu.sin());
    let c = Complex64::new;
    Ok(Matrix2::new(
        ph * c(p.m0, -p.m3),
        ph * c(-p.m2, -p.m1),
        ph * c(p.m2, -p.m1),
        ph * c(p.m0, p.m3),
    ))
}

/// Drops `m2` and renormalizes the remaining components.
pub fn majorana_restrict(p: &BcParams) -> Result<BcParams> {
    let rest = p.m0 * p.m0 + p.m1 * p.m1 + p.m3 * p.m3;
    if rest < NORM_TOL {
        return Err(Error::NotMajoranaCompatible);
    }
    let r = rest.sqrt();
    Ok(BcParams { m0: p.m0 / r, m1: p.m1 / r, m2: 0.0, m3: p.m3 / r, ..*p })
}
