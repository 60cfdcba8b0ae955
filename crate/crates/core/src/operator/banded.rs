use alloc::vec::Vec;
use num_complex::Complex64;

use super::TriCorner;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// LU factorization with partial pivoting of a tridiagonal-plus-corner
/// matrix, after the interleaving `0, n-1, 1, n-2, ...` turns the corners
/// into a narrow band.
#[derive(Debug, Clone)]
pub struct BandLu {
    n: usize,
    kl: usize,
    width: usize,
    rows: Vec<Complex64>,
    mults: Vec<Complex64>,
    piv: Vec<usize>,
    /// position of original index `i` in the interleaved order
    pos: Vec<usize>,
}

fn interleave(n: usize) -> Vec<usize> {
    let mut pos = alloc::vec![0; n];
    let (mut lo, mut hi, mut k) = (0, n - 1, 0);
    while lo <= hi {
        pos[lo] = k;
        k += 1;
        if hi != lo {
            pos[hi] = k;
            k += 1;
        }
        lo += 1;
        if hi == 0 {
            break;
        }
        hi -= 1;
    }
    pos
}

impl BandLu {
    /// `None` when a pivot falls below `rel_tol` times the largest entry.
    pub fn factor(a: &TriCorner, rel_tol: f64) -> Option<Self> {
        let n = a.n();
        let pos = interleave(n);
        let pattern = a.pattern();
        let kl = pattern.iter().map(|&(i, j)| pos[i].abs_diff(pos[j])).max().unwrap_or(0);
        let ku = kl;
        // stored columns of row i: i - kl ..= i + kl + ku
        let width = 2 * kl + ku + 1;
        let mut lu = Self {
            n,
            kl,
            width,
            rows: alloc::vec![ZERO; n * width],
            mults: alloc::vec![ZERO; n * kl.max(1)],
            piv: alloc::vec![0; n],
            pos,
        };
        let mut scale = 0.0_f64;
        for &(i, j) in &pattern {
            let v = a.get(i, j);
            scale = scale.max(v.norm());
            let (r, c) = (lu.pos[i], lu.pos[j]);
            *lu.at(r, c) += v;
        }
        let tiny = rel_tol * scale;
        for k in 0..n {
            let last = (k + kl).min(n - 1);
            let p = (k..=last).max_by(|&x, &y| lu.get(x, k).norm().total_cmp(&lu.get(y, k).norm())).unwrap();
            if !(lu.get(p, k).norm() > tiny) {
                return None;
            }
            lu.piv[k] = p;
            let cmax = (k + kl + ku).min(n - 1);
            if p != k {
                for c in k..=cmax {
                    let t = lu.get(k, c);
                    *lu.at(k, c) = lu.get(p, c);
                    *lu.at(p, c) = t;
                }
            }
            let d = lu.get(k, k);
            for r in k + 1..=last {
                let m = lu.get(r, k) / d;
                lu.mults[k * kl.max(1) + (r - k - 1)] = m;
                *lu.at(r, k) = ZERO;
                if m != ZERO {
                    for c in k + 1..=cmax {
                        let v = lu.get(k, c);
                        *lu.at(r, c) -= m * v;
                    }
                }
            }
        }
        Some(lu)
    }

    fn idx(&self, r: usize, c: usize) -> usize {
        debug_assert!(c + self.kl >= r && c <= r + self.width - self.kl - 1);
        r * self.width + (c + self.kl - r)
    }

    fn at(&mut self, r: usize, c: usize) -> &mut Complex64 {
        let i = self.idx(r, c);
        &mut self.rows[i]
    }

    fn get(&self, r: usize, c: usize) -> Complex64 {
        if c + self.kl < r || c > r + self.width - self.kl - 1 {
            return ZERO;
        }
        self.rows[self.idx(r, c)]
    }

    pub fn solve(&self, rhs: &[Complex64]) -> Vec<Complex64> {
        let (n, kl) = (self.n, self.kl);
        let mut b = alloc::vec![ZERO; n];
        for (i, v) in rhs.iter().enumerate() {
            b[self.pos[i]] = *v;
        }
        for k in 0..n {
            b.swap(k, self.piv[k]);
            let last = (k + kl).min(n - 1);
            for r in k + 1..=last {
                let m = self.mults[k * kl.max(1) + (r - k - 1)];
                let bk = b[k];
                b[r] -= m * bk;
            }
        }
        let span = self.width - self.kl - 1;
        for k in (0..n).rev() {
            let mut s = b[k];
            for c in k + 1..=(k + span).min(n - 1) {
                s -= self.get(k, c) * b[c];
            }
            b[k] = s / self.get(k, k);
        }
        self.pos.iter().map(|&p| b[p]).collect()
    }
}
