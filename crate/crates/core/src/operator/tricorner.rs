use alloc::vec::Vec;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Float;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Square matrix with a tridiagonal band plus the two corner entries
/// `(0, n-1)` and `(n-1, 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TriCorner {
    pub diag: Vec<Complex64>,
    /// Entry `(i, i+1)`.
    pub upper: Vec<Complex64>,
    /// Entry `(i+1, i)`.
    pub lower: Vec<Complex64>,
    pub corner_upper: Complex64,
    pub corner_lower: Complex64,
}

impl TriCorner {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 3, "corner pattern needs at least three rows");
        Self {
            diag: alloc::vec![ZERO; n],
            upper: alloc::vec![ZERO; n - 1],
            lower: alloc::vec![ZERO; n - 1],
            corner_upper: ZERO,
            corner_lower: ZERO,
        }
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// Mutable slot for `(i, j)`, or `None` outside the pattern.
    pub fn slot(&mut self, i: usize, j: usize) -> Option<&mut Complex64> {
        let n = self.n();
        if i == j {
            Some(&mut self.diag[i])
        } else if j == i + 1 {
            Some(&mut self.upper[i])
        } else if i == j + 1 {
            Some(&mut self.lower[j])
        } else if i == 0 && j == n - 1 {
            Some(&mut self.corner_upper)
        } else if i == n - 1 && j == 0 {
            Some(&mut self.corner_lower)
        } else {
            None
        }
    }

    pub fn add(&mut self, i: usize, j: usize, v: Complex64) {
        *self.slot(i, j).expect("entry inside the tridiagonal-corner pattern") += v;
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        let n = self.n();
        if i == j {
            self.diag[i]
        } else if j == i + 1 {
            self.upper[i]
        } else if i == j + 1 {
            self.lower[j]
        } else if i == 0 && j == n - 1 {
            self.corner_upper
        } else if i == n - 1 && j == 0 {
            self.corner_lower
        } else {
            ZERO
        }
    }

    /// Structural nonzero positions, each once.
    pub fn pattern(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut p = Vec::with_capacity(3 * n + 2);
        for i in 0..n {
            p.push((i, i));
            if i + 1 < n {
                p.push((i, i + 1));
                p.push((i + 1, i));
            }
        }
        p.push((0, n - 1));
        p.push((n - 1, 0));
        p
    }

    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.n();
        let mut y: Vec<Complex64> = self.diag.iter().zip(x).map(|(d, v)| d * v).collect();
        for i in 0..n - 1 {
            y[i] += self.upper[i] * x[i + 1];
            y[i + 1] += self.lower[i] * x[i];
        }
        y[0] += self.corner_upper * x[n - 1];
        y[n - 1] += self.corner_lower * x[0];
        y
    }

    /// `D_l A D_r` for diagonal scalings.
    pub fn scaled(&self, left: &[f64], right: &[f64]) -> Self {
        let mut out = self.clone();
        for (i, j) in self.pattern() {
            *out.slot(i, j).unwrap() = self.get(i, j) * left[i] * right[j];
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.pattern().into_iter().all(|(i, j)| self.get(i, j).im == 0.0)
    }

    /// Frobenius norm of `A - A^H`.
    pub fn hermitian_defect(&self) -> f64 {
        self.pattern()
            .into_iter()
            .map(|(i, j)| (self.get(i, j) - self.get(j, i).conj()).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn frobenius(&self) -> f64 {
        self.pattern().into_iter().map(|(i, j)| self.get(i, j).norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let n = self.n();
        let mut m = DMatrix::from_element(n, n, ZERO);
        for (i, j) in self.pattern() {
            m[(i, j)] = self.get(i, j);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matvec_matches_dense() {
        let n = 6;
        let mut a = TriCorner::zeros(n);
        for (k, (i, j)) in a.pattern().into_iter().enumerate() {
            a.add(i, j, Complex64::new(k as f64 + 1.0, 0.5 * k as f64));
        }
        let x: Vec<Complex64> = (0..n).map(|i| Complex64::new(i as f64, -1.0)).collect();
        let dense = a.to_dense() * nalgebra::DVector::from_vec(x.clone());
        for (u, v) in a.matvec(&x).iter().zip(dense.iter()) {
            assert!((u - v).norm() < 1e-12);
        }
        assert!(a.slot(0, 3).is_none());
        assert!(a.hermitian_defect() > 0.0);
    }
}
