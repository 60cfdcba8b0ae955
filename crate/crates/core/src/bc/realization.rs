use nalgebra::Matrix2;
use num_complex::Complex64;
use num_traits::Float;

use super::{BcParams, ALGEBRA_TOL, NORM_TOL};
use crate::{Error, Result};

const SNAP: f64 = 1e-14;

/// Concrete boundary closure.
///
/// `Coupled` maps `(psi(a), lambda psi_x(a))` to `(psi(b), lambda psi_x(b))`.
/// `Separated` holds one relation `alpha psi + beta lambda psi_x = 0` per end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BcRealization {
    Coupled { m: Matrix2<f64> },
    /// Complex transfer matrix for members with `m2 != 0`; `det m = z*/z` with `z = m1 + i m2`.
    CoupledComplex { m: Matrix2<Complex64> },
    Separated { alpha_a: f64, beta_a: f64, alpha_b: f64, beta_b: f64 },
}

/// One end of a separated closure, solved for the derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RobinEnd {
    /// `psi_x = sigma psi`
    Robin { sigma: f64 },
    /// `psi = 0`
    Pinned,
}

impl BcRealization {
    pub fn is_coupled(&self) -> bool {
        !matches!(self, BcRealization::Separated { .. })
    }

    pub fn transfer_matrix(&self) -> Option<Matrix2<Complex64>> {
        match *self {
            BcRealization::Coupled { m } => Some(m.map(|v| Complex64::new(v, 0.0))),
            BcRealization::CoupledComplex { m } => Some(m),
            BcRealization::Separated { .. } => None,
        }
    }

    pub fn ends(&self, lambda: f64) -> Option<(RobinEnd, RobinEnd)> {
        match *self {
            BcRealization::Separated { alpha_a, beta_a, alpha_b, beta_b } => {
                Some((robin_end(alpha_a, beta_a, lambda), robin_end(alpha_b, beta_b, lambda)))
            }
            _ => None,
        }
    }
}

fn robin_end(alpha: f64, beta: f64, lambda: f64) -> RobinEnd {
    if beta == 0.0 {
        RobinEnd::Pinned
    } else {
        RobinEnd::Robin { sigma: -alpha / (beta * lambda) }
    }
}

fn normalized_pair(alpha: f64, beta: f64) -> (f64, f64) {
    let r = alpha.hypot(beta);
    let (mut a, mut b) = (alpha / r, beta / r);
    if a.abs() < SNAP {
        a = 0.0;
    }
    if b.abs() < SNAP {
        b = 0.0;
    }
    if a < 0.0 || (a == 0.0 && b < 0.0) {
        (-a, -b)
    } else {
        (a, b)
    }
}

fn pick(first: (f64, f64), second: (f64, f64)) -> (f64, f64) {
    let n1 = first.0.hypot(first.1);
    let n2 = second.0.hypot(second.1);
    if n1 >= n2 {
        normalized_pair(first.0, first.1)
    } else {
        normalized_pair(second.0, second.1)
    }
}

fn separated(p: &BcParams) -> Result<BcRealization> {
    let (s, c) = (p.mu.sin(), p.mu.cos());
    let (alpha_a, beta_a) = pick((p.m3 + s, -(p.m0 + c)), (p.m0 - c, p.m3 - s));
    let (alpha_b, beta_b) = pick((p.m3 - s, -(p.m0 + c)), (p.m0 - c, p.m3 + s));
    if alpha_a.hypot(beta_a) == 0.0 || alpha_b.hypot(beta_b) == 0.0 {
        return Err(Error::SingularClosure);
    }
    Ok(BcRealization::Separated { alpha_a, beta_a, alpha_b, beta_b })
}

fn real_matrix(p: &BcParams) -> Matrix2<f64> {
    let (s, c) = (p.mu.sin(), p.mu.cos());
    Matrix2::new(p.m3 + s, -p.m0 - c, -p.m0 + c, -p.m3 + s) / p.m1
}

/// Realization of a Majorana-compatible member (`m2 = 0`).
pub fn m_matrix(p: &BcParams) -> Result<BcRealization> {
    if !p.is_majorana_compatible() {
        return Err(Error::NotMajoranaCompatible);
    }
    if p.m1.abs() > ALGEBRA_TOL {
        Ok(BcRealization::Coupled { m: real_matrix(p) })
    } else {
        separated(p)
    }
}

/// Realization of any member of the family, complex ones included.
pub fn realize(p: &BcParams) -> Result<BcRealization> {
    if p.m2.abs() <= NORM_TOL {
        return m_matrix(p);
    }
    let z = Complex64::new(p.m1, p.m2);
    if z.norm() <= ALGEBRA_TOL {
        return separated(p);
    }
    let (s, c) = (p.mu.sin(), p.mu.cos());
    let r = |v: f64| Complex64::new(v, 0.0) / z;
    Ok(BcRealization::CoupledComplex {
        m: Matrix2::new(r(p.m3 + s), r(-p.m0 - c), r(c - p.m0), r(s - p.m3)),
    })
}
