use alloc::vec::Vec;
use nalgebra::Matrix2;
use num_complex::Complex64;

use super::TriCorner;
use crate::bc::{BcRealization, RobinEnd, ALGEBRA_TOL};
use crate::model::Grid;
use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub enum ClosureKind {
    Separated { a: RobinEnd, b: RobinEnd },
    /// Both end values are unknowns; end derivatives follow from the transfer matrix.
    Coupled { m: Matrix2<Complex64> },
    /// `psi(b) = m11 psi(a)`; the last node is a dependent copy of the first.
    Linked { m: Matrix2<Complex64> },
}

/// Discrete boundary closure: which nodes are unknowns, and the boundary
/// part of the summation-by-parts quadratic form.
#[derive(Debug, Clone, PartialEq)]
pub struct Closure {
    kind: ClosureKind,
    lambda: f64,
    dx: f64,
    /// node -> (unknown index, factor)
    map: Vec<Option<(usize, Complex64)>>,
    dof_nodes: Vec<usize>,
    node_weights: Vec<f64>,
}

impl Closure {
    pub fn new(real: &BcRealization, grid: &Grid, lambda: f64) -> Result<Self> {
        let n = grid.n();
        let kind = match real.ends(lambda) {
            Some((a, b)) => ClosureKind::Separated { a, b },
            None => {
                let m = real.transfer_matrix().ok_or(Error::SingularClosure)?;
                if m.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
                    return Err(Error::SingularClosure);
                }
                if m[(0, 1)].norm() > ALGEBRA_TOL {
                    ClosureKind::Coupled { m }
                } else if m[(0, 0)].norm() > ALGEBRA_TOL {
                    ClosureKind::Linked { m }
                } else {
                    return Err(Error::SingularClosure);
                }
            }
        };
        let mut map = alloc::vec![None; n];
        let mut dof_nodes = Vec::with_capacity(n);
        for (i, slot) in map.iter_mut().enumerate() {
            let pinned = match &kind {
                ClosureKind::Separated { a, b } => {
                    (i == 0 && *a == RobinEnd::Pinned) || (i == n - 1 && *b == RobinEnd::Pinned)
                }
                _ => false,
            };
            if pinned {
                continue;
            }
            if i == n - 1 {
                if let ClosureKind::Linked { m } = &kind {
                    *slot = Some((0, m[(0, 0)]));
                    continue;
                }
            }
            *slot = Some((dof_nodes.len(), ONE));
            dof_nodes.push(i);
        }
        Ok(Self { kind, lambda, dx: grid.dx(), map, dof_nodes, node_weights: grid.weights() })
    }

    pub fn kind(&self) -> &ClosureKind {
        &self.kind
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn n_nodes(&self) -> usize {
        self.map.len()
    }

    pub fn n_dof(&self) -> usize {
        self.dof_nodes.len()
    }

    pub fn dof_nodes(&self) -> &[usize] {
        &self.dof_nodes
    }

    pub fn gather(&self, nodes: &[Complex64]) -> Vec<Complex64> {
        self.dof_nodes.iter().map(|&i| nodes[i]).collect()
    }

    pub fn scatter(&self, dofs: &[Complex64]) -> Vec<Complex64> {
        self.map.iter().map(|m| m.map_or(ZERO, |(d, f)| f * dofs[d])).collect()
    }

    /// Nearest field obeying the closure constraints (pinned and dependent nodes reset).
    pub fn project(&self, nodes: &[Complex64]) -> Vec<Complex64> {
        self.scatter(&self.gather(nodes))
    }

    pub fn conformity_defect(&self, nodes: &[Complex64]) -> f64 {
        self.project(nodes).iter().zip(nodes).map(|(p, v)| (p - v).norm()).fold(0.0, f64::max)
    }

    /// Sums `w_i |f_i|^2 v_i` onto the unknowns; with `v = 1` these are the mass weights.
    pub fn lump(&self, node_values: &[f64]) -> Vec<f64> {
        let mut out = alloc::vec![0.0; self.n_dof()];
        for (i, m) in self.map.iter().enumerate() {
            if let Some((d, f)) = m {
                out[*d] += self.node_weights[i] * f.norm_sqr() * node_values[i];
            }
        }
        out
    }

    /// Hermitian form `sum_edges dx |D+ psi|^2 + psi*(a) psi_x(a) - psi*(b) psi_x(b)`
    /// on the unknowns.
    pub fn form(&self) -> TriCorner {
        let nd = self.n_dof();
        let mut h = TriCorner::zeros(nd);
        let inv = 1.0 / self.dx;
        for e in 0..self.map.len() - 1 {
            let ends = [self.map[e], self.map[e + 1]];
            let sign = [1.0, -1.0];
            for (p, ep) in ends.iter().enumerate() {
                for (q, eq) in ends.iter().enumerate() {
                    if let (Some((dp, fp)), Some((dq, fq))) = (ep, eq) {
                        h.add(*dp, *dq, fp.conj() * fq * (sign[p] * sign[q] * inv));
                    }
                }
            }
        }
        let lam = self.lambda;
        match &self.kind {
            ClosureKind::Separated { a, b } => {
                if let RobinEnd::Robin { sigma } = a {
                    h.add(0, 0, Complex64::new(*sigma, 0.0));
                }
                if let RobinEnd::Robin { sigma } = b {
                    h.add(nd - 1, nd - 1, Complex64::new(-sigma, 0.0));
                }
            }
            ClosureKind::Coupled { m } => {
                let g = ONE / (m[(0, 1)] * lam);
                h.add(0, 0, -m[(0, 0)] * g);
                h.add(nd - 1, nd - 1, -m[(1, 1)] * g);
                h.add(0, nd - 1, g);
                h.add(nd - 1, 0, m.determinant() * g);
            }
            ClosureKind::Linked { m } => {
                h.add(0, 0, -(m[(0, 0)].conj() * m[(1, 0)]) / lam);
            }
        }
        h
    }

    /// End derivatives of a conforming field from its discrete `-psi_xx`.
    pub fn end_derivatives(&self, nodes: &[Complex64], lap: &[Complex64]) -> (Complex64, Complex64) {
        let n = nodes.len();
        let h = self.dx;
        let da = (nodes[1] - nodes[0]) / h + 0.5 * h * lap[0];
        let db = (nodes[n - 1] - nodes[n - 2]) / h - 0.5 * h * lap[n - 1];
        (da, db)
    }

    /// Centered first derivative; the end values come from the closure.
    pub fn derivative(&self, nodes: &[Complex64], lap: &[Complex64]) -> Vec<Complex64> {
        let n = nodes.len();
        let mut d = alloc::vec![ZERO; n];
        for i in 1..n - 1 {
            d[i] = (nodes[i + 1] - nodes[i - 1]) / (2.0 * self.dx);
        }
        let (da, db) = self.end_derivatives(nodes, lap);
        d[0] = da;
        d[n - 1] = db;
        d
    }
}
