//! Units, grid, scalar potential and the two state representations.

use alloc::vec::Vec;
use num_complex::Complex64;
use num_traits::Float;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalUnits {
    pub hbar: f64,
    pub c: f64,
    pub mass: f64,
    /// Length scale used by the boundary conditions.
    pub lambda: f64,
}

impl Default for PhysicalUnits {
    fn default() -> Self {
        Self { hbar: 1.0, c: 1.0, mass: 1.0, lambda: 1.0 }
    }
}

impl PhysicalUnits {
    pub fn new(hbar: f64, c: f64, mass: f64, lambda: f64) -> Result<Self> {
        for v in [hbar, c, mass, lambda] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidUnits("constants must be finite and positive"));
            }
        }
        Ok(Self { hbar, c, mass, lambda })
    }

    /// Rest energy `m c^2`.
    pub fn mc2(&self) -> f64 {
        self.mass * self.c * self.c
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    a: f64,
    b: f64,
    n: usize,
    dx: f64,
}

impl Grid {
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || b <= a {
            return Err(Error::InvalidGrid("need finite a < b"));
        }
        if n < 8 {
            return Err(Error::InvalidGrid("need at least 8 points"));
        }
        Ok(Self { a, b, n, dx: (b - a) / (n - 1) as f64 })
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn dx(&self) -> f64 {
        self.dx
    }
    pub fn length(&self) -> f64 {
        self.b - self.a
    }

    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.n {
            self.b
        } else {
            self.a + i as f64 * self.dx
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.x(i)).collect()
    }

    /// Trapezoid weights; shared by every integral and by mode normalization.
    pub fn weights(&self) -> Vec<f64> {
        let mut w = alloc::vec![self.dx; self.n];
        w[0] = 0.5 * self.dx;
        w[self.n - 1] = 0.5 * self.dx;
        w
    }

    /// Same interval with `2(n-1)+1` points, i.e. half the spacing.
    pub fn refined(&self) -> Self {
        Self::new(self.a, self.b, 2 * self.n - 1).expect("refinement of a valid grid")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpatialProfile {
    Constant { value: f64 },
    /// `left` for `x < x0`, `right` otherwise.
    Step { x0: f64, left: f64, right: f64 },
    /// `s0 + s2 (x - x0)^2`.
    Quadratic { s0: f64, s2: f64, x0: f64 },
    /// Piecewise linear through `(xs[k], values[k])`, constant outside.
    Tabulated { xs: Vec<f64>, values: Vec<f64> },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TimeFactor {
    Constant,
    /// `offset + amplitude sin(omega t + phase)`.
    Sinusoidal { offset: f64, amplitude: f64, omega: f64, phase: f64 },
    /// `offset + rate t`.
    Linear { offset: f64, rate: f64 },
}

impl TimeFactor {
    pub fn value(&self, t: f64) -> f64 {
        match *self {
            TimeFactor::Constant => 1.0,
            TimeFactor::Sinusoidal { offset, amplitude, omega, phase } => {
                offset + amplitude * (omega * t + phase).sin()
            }
            TimeFactor::Linear { offset, rate } => offset + rate * t,
        }
    }

    pub fn derivative(&self, t: f64) -> f64 {
        match *self {
            TimeFactor::Constant => 0.0,
            TimeFactor::Sinusoidal { amplitude, omega, phase, .. } => {
                amplitude * omega * (omega * t + phase).cos()
            }
            TimeFactor::Linear { rate, .. } => rate,
        }
    }
}

/// Real Lorentz scalar interaction `S(x, t) = profile(x) * factor(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPotential {
    pub profile: SpatialProfile,
    pub time: TimeFactor,
    pub nonneg: bool,
}

impl ScalarPotential {
    pub fn zero() -> Self {
        Self::constant(0.0)
    }

    pub fn constant(value: f64) -> Self {
        Self {
            profile: SpatialProfile::Constant { value },
            time: TimeFactor::Constant,
            nonneg: value >= 0.0,
        }
    }

    pub fn new(profile: SpatialProfile, time: TimeFactor, nonneg: bool) -> Result<Self> {
        let finite = |v: &[f64]| v.iter().all(|x| x.is_finite());
        let ok = match &profile {
            SpatialProfile::Constant { value } => value.is_finite(),
            SpatialProfile::Step { x0, left, right } => finite(&[*x0, *left, *right]),
            SpatialProfile::Quadratic { s0, s2, x0 } => finite(&[*s0, *s2, *x0]),
            SpatialProfile::Tabulated { xs, values } => {
                !xs.is_empty()
                    && xs.len() == values.len()
                    && finite(xs)
                    && finite(values)
                    && xs.windows(2).all(|w| w[1] > w[0])
            }
        };
        if !ok {
            return Err(Error::InvalidPotential("malformed spatial profile"));
        }
        let time_ok = match time {
            TimeFactor::Constant => true,
            TimeFactor::Sinusoidal { offset, amplitude, omega, phase } => {
                finite(&[offset, amplitude, omega, phase])
            }
            TimeFactor::Linear { offset, rate } => finite(&[offset, rate]),
        };
        if !time_ok {
            return Err(Error::InvalidPotential("malformed time factor"));
        }
        Ok(Self { profile, time, nonneg })
    }

    pub fn is_static(&self) -> bool {
        matches!(self.time, TimeFactor::Constant)
    }

    pub fn spatial(&self, x: f64) -> f64 {
        match &self.profile {
            SpatialProfile::Constant { value } => *value,
            SpatialProfile::Step { x0, left, right } => {
                if x < *x0 {
                    *left
                } else {
                    *right
                }
            }
            SpatialProfile::Quadratic { s0, s2, x0 } => s0 + s2 * (x - x0) * (x - x0),
            SpatialProfile::Tabulated { xs, values } => {
                let k = xs.partition_point(|&p| p <= x);
                if k == 0 {
                    values[0]
                } else if k == xs.len() {
                    values[xs.len() - 1]
                } else {
                    let s = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
                    values[k - 1] + s * (values[k] - values[k - 1])
                }
            }
        }
    }

    /// Spatial derivative of the profile; the step is treated as flat on both sides.
    pub fn spatial_derivative(&self, x: f64) -> f64 {
        match &self.profile {
            SpatialProfile::Constant { .. } | SpatialProfile::Step { .. } => 0.0,
            SpatialProfile::Quadratic { s2, x0, .. } => 2.0 * s2 * (x - x0),
            SpatialProfile::Tabulated { xs, values } => {
                let slope = |k: usize| (values[k + 1] - values[k]) / (xs[k + 1] - xs[k]);
                if xs.len() < 2 {
                    return 0.0;
                }
                let k = xs.partition_point(|&p| p < x);
                if k == 0 || (k == xs.len() && x > xs[xs.len() - 1]) {
                    0.0
                } else if k < xs.len() && xs[k] == x {
                    let l = if k > 0 { slope(k - 1) } else { 0.0 };
                    let r = if k + 1 < xs.len() { slope(k) } else { 0.0 };
                    if k == 0 || k + 1 == xs.len() {
                        l + r
                    } else {
                        0.5 * (l + r)
                    }
                } else {
                    slope(k - 1)
                }
            }
        }
    }

    pub fn value(&self, x: f64, t: f64) -> f64 {
        self.spatial(x) * self.time.value(t)
    }

    pub fn dt(&self, x: f64, t: f64) -> f64 {
        self.spatial(x) * self.time.derivative(t)
    }

    pub fn dx(&self, x: f64, t: f64) -> f64 {
        self.spatial_derivative(x) * self.time.value(t)
    }

    /// Node values at time `t`, enforcing the non-negativity flag.
    pub fn sample(&self, grid: &Grid, t: f64) -> Result<Vec<f64>> {
        let s: Vec<f64> = (0..grid.n()).map(|i| self.value(grid.x(i), t)).collect();
        if s.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidPotential("non-finite sample"));
        }
        if self.nonneg && s.iter().any(|&v| v < 0.0) {
            return Err(Error::InvalidPotential("negative value with nonneg flag set"));
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MajoranaKind {
    /// `psi = psi*`
    Plus,
    /// `psi = -psi*`
    Minus,
    None,
}

/// One-component state of record: `psi` and its time derivative.
#[derive(Debug, Clone, PartialEq)]
pub struct KfgState {
    pub psi: Vec<Complex64>,
    pub psi_t: Vec<Complex64>,
    pub t: f64,
    pub kind: MajoranaKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FvState {
    pub psi1: Vec<Complex64>,
    pub psi2: Vec<Complex64>,
    pub t: f64,
}

fn all_finite(v: &[Complex64]) -> bool {
    v.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

impl KfgState {
    pub fn new(psi: Vec<Complex64>, psi_t: Vec<Complex64>, t: f64, kind: MajoranaKind) -> Result<Self> {
        if psi.len() != psi_t.len() {
            return Err(Error::InvalidState("field lengths differ"));
        }
        if !(all_finite(&psi) && all_finite(&psi_t) && t.is_finite()) {
            return Err(Error::InvalidState("non-finite entries"));
        }
        Ok(Self { psi, psi_t, t, kind })
    }

    pub fn zeros(n: usize, t: f64) -> Self {
        let z = alloc::vec![Complex64::new(0.0, 0.0); n];
        Self { psi: z.clone(), psi_t: z, t, kind: MajoranaKind::None }
    }

    pub fn len(&self) -> usize {
        self.psi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.psi.is_empty()
    }

    /// Largest deviation from the tag's reality condition.
    pub fn tag_violation(&self) -> f64 {
        let part = |z: &Complex64| match self.kind {
            MajoranaKind::Plus => z.im.abs(),
            MajoranaKind::Minus => z.re.abs(),
            MajoranaKind::None => 0.0,
        };
        self.psi.iter().chain(&self.psi_t).map(part).fold(0.0, f64::max)
    }
}

pub fn kfg_to_fv(state: &KfgState, units: &PhysicalUnits) -> Result<FvState> {
    if !(all_finite(&state.psi) && all_finite(&state.psi_t)) {
        return Err(Error::InvalidState("non-finite entries"));
    }
    let s = Complex64::new(0.0, units.hbar / units.mc2());
    let (psi1, psi2) = state
        .psi
        .iter()
        .zip(&state.psi_t)
        .map(|(&p, &pt)| (0.5 * (p + s * pt), 0.5 * (p - s * pt)))
        .unzip();
    Ok(FvState { psi1, psi2, t: state.t })
}

pub fn fv_to_kfg(state: &FvState, units: &PhysicalUnits) -> Result<KfgState> {
    if state.psi1.len() != state.psi2.len() {
        return Err(Error::InvalidState("component lengths differ"));
    }
    if !(all_finite(&state.psi1) && all_finite(&state.psi2)) {
        return Err(Error::InvalidState("non-finite entries"));
    }
    // mc^2 / (i hbar)
    let f = Complex64::new(0.0, -units.mc2() / units.hbar);
    let (psi, psi_t) = state
        .psi1
        .iter()
        .zip(&state.psi2)
        .map(|(&a, &b)| (a + b, f * (a - b)))
        .unzip();
    Ok(KfgState { psi, psi_t, t: state.t, kind: MajoranaKind::None })
}

pub fn majorana_project(state: &KfgState, kind: MajoranaKind) -> KfgState {
    let f = |z: &Complex64| match kind {
        MajoranaKind::Plus => Complex64::new(z.re, 0.0),
        MajoranaKind::Minus => Complex64::new(0.0, z.im),
        MajoranaKind::None => *z,
    };
    KfgState {
        psi: state.psi.iter().map(f).collect(),
        psi_t: state.psi_t.iter().map(f).collect(),
        t: state.t,
        kind: if kind == MajoranaKind::None { state.kind } else { kind },
    }
}

impl FvState {
    pub fn len(&self) -> usize {
        self.psi1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.psi1.is_empty()
    }

    /// Unweighted Euclidean norm of both components.
    pub fn l2(&self) -> f64 {
        self.psi1.iter().chain(&self.psi2).map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Pointwise `Psi - sign * tau1 Psi*`, as an unweighted Euclidean norm.
    pub fn charge_conjugation_defect(&self, sign: f64) -> f64 {
        self.psi1
            .iter()
            .zip(&self.psi2)
            .map(|(a, b)| (a - sign * b.conj()).norm_sqr() + (b - sign * a.conj()).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}
