use alloc::borrow::Cow;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::model::{FvState, KfgState, PhysicalUnits};
use crate::operator::KineticMatrix;
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Nodal values and derivatives needed by every density.
#[derive(Debug, Clone)]
pub(crate) struct Jet {
    pub psi: Vec<Complex64>,
    pub psi_t: Vec<Complex64>,
    pub dpsi: Vec<Complex64>,
    pub dpsi_t: Vec<Complex64>,
    /// On-shell `E^2 psi`.
    pub e2: Vec<Complex64>,
    pub s: Vec<f64>,
}

pub(crate) fn kinetic_at<'a>(k: &'a KineticMatrix, t: f64) -> Result<Cow<'a, KineticMatrix>> {
    if k.potential().is_static() || k.time() == t {
        Ok(Cow::Borrowed(k))
    } else {
        Ok(Cow::Owned(k.at_time(t)?))
    }
}

impl Jet {
    pub fn new(state: &KfgState, k: &KineticMatrix) -> Result<Self> {
        if state.len() != k.grid().n() {
            return Err(Error::InvalidState("state length does not match the grid"));
        }
        let k = kinetic_at(k, state.t)?;
        Ok(Self {
            dpsi: k.derivative(&state.psi),
            dpsi_t: k.derivative(&state.psi_t),
            e2: k.apply(&state.psi),
            s: k.node_potential().to_vec(),
            psi: state.psi.clone(),
            psi_t: state.psi_t.clone(),
        })
    }
}

/// Per-node operator values: `psi`, `E psi`, `c p psi`, `c p E psi`, `E^2 psi`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Point {
    pub p: Complex64,
    pub e: Complex64,
    pub cp: Complex64,
    pub cpe: Complex64,
    pub e2: Complex64,
    pub s: f64,
}

impl Jet {
    pub fn point(&self, i: usize, u: &PhysicalUnits) -> Point {
        Point {
            p: self.psi[i],
            e: I * u.hbar * self.psi_t[i],
            cp: -I * u.hbar * u.c * self.dpsi[i],
            cpe: u.hbar * u.hbar * u.c * self.dpsi_t[i],
            e2: self.e2[i],
            s: self.s[i],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObservableFields {
    pub t: f64,
    pub rho: Vec<Complex64>,
    pub j: Vec<Complex64>,
    pub rho_e: Vec<Complex64>,
    pub j_e: Vec<Complex64>,
    pub rho_tilde_e: Vec<Complex64>,
    pub t00: Vec<Complex64>,
    /// `c T^1_0`, the real energy current.
    pub ct10: Vec<Complex64>,
    pub t11: Vec<Complex64>,
    /// `c T^0_1` recomputed from the time and space derivatives directly.
    pub t01_check: Vec<Complex64>,
}

pub(crate) fn max_abs(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}


impl ObservableFields {
    /// Largest energy density magnitude; the reference for relative tolerances.
    pub fn scale(&self) -> f64 {
        max_abs(&self.t00).max(max_abs(&self.rho_e))
    }

    pub fn len(&self) -> usize {
        self.rho.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rho.is_empty()
    }
}

pub(crate) fn fields_from_jet(jet: &Jet, u: &PhysicalUnits, t: f64) -> ObservableFields {
    let n = jet.psi.len();
    let (m, c, mc2) = (u.mass, u.c, u.mc2());
    let mut f = ObservableFields {
        t,
        rho: Vec::with_capacity(n),
        j: Vec::with_capacity(n),
        rho_e: Vec::with_capacity(n),
        j_e: Vec::with_capacity(n),
        rho_tilde_e: Vec::with_capacity(n),
        t00: Vec::with_capacity(n),
        ct10: Vec::with_capacity(n),
        t11: Vec::with_capacity(n),
        t01_check: Vec::with_capacity(n),
    };
    for i in 0..n {
        let q = jet.point(i, u);
        let pc = q.p.conj();
        let mass = (mc2 * mc2 + 2.0 * mc2 * q.s) * q.p.norm_sqr();
        let (e2n, cp2n) = (q.e.norm_sqr(), q.cp.norm_sqr());
        f.rho.push((pc * q.e + q.e.conj() * q.p) / (2.0 * mc2));
        f.j.push((pc * q.cp + q.cp.conj() * q.p) / (2.0 * m * c));
        f.rho_e.push((pc * q.e2 + q.e.conj() * q.e) / (2.0 * mc2));
        f.j_e.push((pc * q.cpe + q.cp.conj() * q.e) / (2.0 * m * c));
        f.rho_tilde_e.push(Complex64::new((pc * q.e2).re / mc2, 0.0));
        f.t00.push(Complex64::new((e2n + cp2n + mass) / (2.0 * mc2), 0.0));
        f.ct10.push(Complex64::new((q.e.conj() * q.cp).re / (m * c), 0.0));
        f.t11.push(Complex64::new((-e2n - cp2n + mass) / (2.0 * mc2), 0.0));
        let h2m = u.hbar * u.hbar / (2.0 * m);
        let (pt, dp) = (jet.psi_t[i], jet.dpsi[i]);
        f.t01_check.push(-h2m * (pt * dp.conj() + pt.conj() * dp));
    }
    f
}

/// Every local density of a one-component state.
///
/// `E^2 psi` is taken on shell from the discrete kinetic operator, which is
/// resampled at `state.t` when the potential depends on time.
pub fn local_fields(state: &KfgState, kinetic: &KineticMatrix) -> Result<ObservableFields> {
    let jet = Jet::new(state, kinetic)?;
    Ok(fields_from_jet(&jet, kinetic.units(), state.t))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoComponentFields {
    pub rho: Vec<Complex64>,
    pub j: Vec<Complex64>,
    pub rho_e: Vec<Complex64>,
    pub j_e: Vec<Complex64>,
}

/// `(h Psi)` on the nodes for a two-component state.
pub(crate) fn apply_h(fv: &FvState, k: &KineticMatrix) -> (Vec<Complex64>, Vec<Complex64>) {
    let u = k.units();
    let mc2 = u.mc2();
    let s: Vec<Complex64> = fv.psi1.iter().zip(&fv.psi2).map(|(a, b)| a + b).collect();
    let ks = k.apply(&s);
    let a: Vec<Complex64> = ks.iter().zip(&s).map(|(kv, v)| (kv - mc2 * mc2 * v) / (2.0 * mc2)).collect();
    let h1 = a.iter().zip(&fv.psi1).map(|(a, p)| a + mc2 * p).collect();
    let h2 = a.iter().zip(&fv.psi2).map(|(a, p)| -a - mc2 * p).collect();
    (h1, h2)
}

/// Densities from the two-component form with `B = tau3 + i tau2`.
pub fn two_component_fields(fv: &FvState, kinetic: &KineticMatrix) -> Result<TwoComponentFields> {
    if fv.psi1.len() != kinetic.grid().n() || fv.psi2.len() != fv.psi1.len() {
        return Err(Error::InvalidState("state length does not match the grid"));
    }
    let k = kinetic_at(kinetic, fv.t)?;
    let u = *k.units();
    let (hbar, m) = (u.hbar, u.mass);
    let (h1, h2) = apply_h(fv, &k);
    let ih = I * hbar;
    let dot1: Vec<Complex64> = h1.iter().map(|v| v / ih).collect();
    let dot2: Vec<Complex64> = h2.iter().map(|v| v / ih).collect();
    let x1 = k.derivative(&fv.psi1);
    let x2 = k.derivative(&fv.psi2);
    let dx1 = k.derivative(&dot1);
    let dx2 = k.derivative(&dot2);
    // (B X)^dagger (B Y) = 2 (x1 + x2)* (y1 + y2)
    let bb = |x1: Complex64, x2: Complex64, y1: Complex64, y2: Complex64| 2.0 * (x1 + x2).conj() * (y1 + y2);
    let n = fv.psi1.len();
    let mut out = TwoComponentFields {
        rho: Vec::with_capacity(n),
        j: Vec::with_capacity(n),
        rho_e: Vec::with_capacity(n),
        j_e: Vec::with_capacity(n),
    };
    for i in 0..n {
        let (p1, p2) = (fv.psi1[i], fv.psi2[i]);
        out.rho.push(p1.conj() * p1 - p2.conj() * p2);
        out.j.push(ih / (2.0 * m) * 0.5 * (bb(x1[i], x2[i], p1, p2) - bb(p1, p2, x1[i], x2[i])));
        out.j_e.push(
            -(hbar * hbar / (2.0 * m))
                * 0.5
                * (bb(x1[i], x2[i], dot1[i], dot2[i]) - bb(p1, p2, dx1[i], dx2[i])),
        );
        out.rho_e.push(p1.conj() * h1[i] - p2.conj() * h2[i]);
    }
    Ok(out)
}
