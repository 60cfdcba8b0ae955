use alloc::vec::Vec;
use core::f64::consts::PI;
use num_traits::Float;

use super::BcParams;
use crate::{Error, Result};

const CLUSTER_RADIUS: f64 = 1e-4;
const MAX_ITERS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfiningPoint {
    pub m0: f64,
    pub m1: f64,
    pub m3: f64,
    pub mu: f64,
    /// Largest absolute residual of the defining equations at this point.
    pub residual: f64,
}

fn radical_inverse(mut i: usize, base: usize) -> f64 {
    let (mut f, mut r) = (1.0, 0.0);
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

/// Levenberg-Marquardt on a residual with `N` unknowns; returns the final point.
fn refine<const N: usize, const R: usize>(
    mut x: [f64; N],
    f: impl Fn(&[f64; N]) -> ([f64; R], [[f64; N]; R]),
) -> [f64; N] {
    let mut damp = 1e-3;
    let cost = |r: &[f64; R]| r.iter().map(|v| v * v).sum::<f64>();
    let (mut r, mut jac) = f(&x);
    let mut c = cost(&r);
    for _ in 0..MAX_ITERS {
        if c == 0.0 {
            break;
        }
        let mut a = [[0.0; N]; N];
        let mut g = [0.0; N];
        for k in 0..R {
            for i in 0..N {
                g[i] += jac[k][i] * r[k];
                for j in 0..N {
                    a[i][j] += jac[k][i] * jac[k][j];
                }
            }
        }
        let step = loop {
            let mut m = a;
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += damp * (1.0 + a[i][i]);
            }
            let d = solve_small(m, g);
            let mut trial = x;
            for i in 0..N {
                trial[i] -= d[i];
            }
            let (tr, tj) = f(&trial);
            let tc = cost(&tr);
            if tc <= c {
                damp = (damp * 0.3).max(1e-15);
                x = trial;
                r = tr;
                jac = tj;
                c = tc;
                break d;
            }
            damp *= 10.0;
            if damp > 1e12 {
                break [0.0; N];
            }
        };
        if step.iter().all(|s| s.abs() < 1e-16) {
            break;
        }
    }
    x
}

fn solve_small<const N: usize>(mut m: [[f64; N]; N], mut b: [f64; N]) -> [f64; N] {
    for col in 0..N {
        let piv = (col..N).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs())).unwrap();
        m.swap(col, piv);
        b.swap(col, piv);
        if m[col][col] == 0.0 {
            return [0.0; N];
        }
        for row in col + 1..N {
            let f = m[row][col] / m[col][col];
            for k in col..N {
                m[row][k] -= f * m[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; N];
    for i in (0..N).rev() {
        let s: f64 = (i + 1..N).map(|k| m[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / m[i][i];
    }
    x
}

fn confining_system(v: &[f64; 2]) -> ([f64; 6], [[f64; 2]; 6]) {
    let (m0, m3) = (v[0].cos(), v[0].sin());
    let (s, c) = (v[1].sin(), v[1].cos());
    let r = [m0 * m3, s * c, m0 * s, m3 * c, m0 * m0 - c * c, m3 * m3 - s * s];
    let j = [
        [m0 * m0 - m3 * m3, 0.0],
        [0.0, c * c - s * s],
        [-m3 * s, m0 * c],
        [m0 * c, -m3 * s],
        [-2.0 * m0 * m3, 2.0 * c * s],
        [2.0 * m0 * m3, -2.0 * s * c],
    ];
    (r, j)
}

fn energy_slice_system(m1: f64) -> impl Fn(&[f64; 1]) -> ([f64; 5], [[f64; 1]; 5]) {
    move |v| {
        let (s, c) = (v[0].sin(), v[0].cos());
        let r = [s * c, s * s - m1 * m1, c * c, s * c, s * s - m1 * m1];
        let j = [[c * c - s * s], [2.0 * s * c], [-2.0 * s * c], [c * c - s * s], [2.0 * s * c]];
        (r, j)
    }
}

/// Folds to `mu` in `[0, pi)` and maps points just below `pi` onto `mu = 0`.
fn canonical(m0: f64, m1: f64, m3: f64, mu: f64) -> Option<(f64, f64, f64, f64)> {
    let norm = (m0 * m0 + m1 * m1 + m3 * m3).sqrt();
    let p = BcParams::new(m0 / norm, m1 / norm, 0.0, m3 / norm, mu, 1.0).ok()?;
    if PI - p.mu < CLUSTER_RADIUS {
        Some((-p.m0, -p.m1, -p.m3, p.mu - PI))
    } else {
        Some((p.m0, p.m1, p.m3, p.mu))
    }
}

fn push_cluster(out: &mut Vec<ConfiningPoint>, p: ConfiningPoint) {
    let near = |q: &ConfiningPoint| {
        (q.m0 - p.m0).abs().max((q.m1 - p.m1).abs()).max((q.m3 - p.m3).abs()).max((q.mu - p.mu).abs())
            < CLUSTER_RADIUS
    };
    match out.iter_mut().find(|q| near(q)) {
        Some(q) if p.residual < q.residual => *q = p,
        Some(_) => {}
        None => out.push(p),
    }
}

fn tol_floor(tol: f64) -> f64 {
    tol.max(64.0 * f64::EPSILON)
}

fn finish(mut out: Vec<ConfiningPoint>) -> Vec<ConfiningPoint> {
    for p in &mut out {
        p.mu = p.mu.max(0.0);
    }
    out.sort_by(|a, b| (a.mu, a.m0, a.m3, a.m1).partial_cmp(&(b.mu, b.m0, b.m3, b.m1)).unwrap());
    out
}

/// Solutions of the confining tau1 system over `(m0, m3, mu)` with `m1 = m2 = 0`,
/// found by refining a deterministic low-discrepancy sample of the circle times `[0, pi)`.
pub fn enumerate_confining_solutions(samples: usize, tol: f64) -> Result<Vec<ConfiningPoint>> {
    if samples < 10_000 {
        return Err(Error::InvalidConfig("need at least 10^4 samples"));
    }
    let tol = tol_floor(tol);
    let mut out = Vec::new();
    for i in 1..=samples {
        let start = [2.0 * PI * radical_inverse(i, 2), PI * radical_inverse(i, 3)];
        let x = refine(start, confining_system);
        let residual = confining_system(&x).0.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        if residual > tol {
            continue;
        }
        if let Some((m0, m1, m3, mu)) = canonical(x[0].cos(), 0.0, x[0].sin(), x[1]) {
            push_cluster(&mut out, ConfiningPoint { m0, m1, m3, mu, residual });
        }
    }
    Ok(finish(out))
}

/// Solutions of the energy-condition equations on the slice `m0 = m3 = 0`, `m1 = +-1`.
pub fn enumerate_energy_slice(samples: usize, tol: f64) -> Result<Vec<ConfiningPoint>> {
    if samples < 2 {
        return Err(Error::InvalidConfig("need at least 2 samples"));
    }
    let tol = tol_floor(tol);
    let mut out = Vec::new();
    for m1 in [1.0, -1.0] {
        let sys = energy_slice_system(m1);
        for i in 0..samples {
            let start = [PI * (i as f64 + 0.5) / samples as f64];
            let x = refine(start, &sys);
            let residual = sys(&x).0.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            if residual > tol {
                continue;
            }
            if let Some((m0, m1, m3, mu)) = canonical(0.0, m1, 0.0, x[0]) {
                push_cluster(&mut out, ConfiningPoint { m0, m1, m3, mu, residual });
            }
        }
    }
    Ok(finish(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_PI_2;

    #[test]
    fn four_confining_points() {
        let pts = enumerate_confining_solutions(20_000, 1e-6).unwrap();
        assert_eq!(pts.len(), 4, "{pts:?}");
        let want = [(-1.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, -1.0, FRAC_PI_2), (0.0, 1.0, FRAC_PI_2)];
        for (p, (m0, m3, mu)) in pts.iter().zip(want) {
            assert!((p.m0 - m0).abs() < 1e-8 && (p.m3 - m3).abs() < 1e-8 && (p.mu - mu).abs() < 1e-8, "{p:?}");
        }
    }

    #[test]
    fn exact_tolerance_still_finds_all_four() {
        assert_eq!(enumerate_confining_solutions(10_000, 0.0).unwrap().len(), 4);
    }

    #[test]
    fn energy_slice_only_quarter_turn() {
        let pts = enumerate_energy_slice(2000, 1e-6).unwrap();
        assert!(!pts.is_empty());
        for p in &pts {
            assert!((p.mu - FRAC_PI_2).abs() < 1e-3, "{p:?}");
        }
    }

    #[test]
    fn too_few_samples() {
        assert!(enumerate_confining_solutions(10, 1e-6).is_err());
    }
}
