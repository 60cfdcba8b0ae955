use alloc::vec::Vec;

use super::fields::{local_fields, ObservableFields};
use crate::model::KfgState;
use crate::operator::KineticMatrix;
use crate::{Error, Result};

/// Max-norm residuals of the local conservation laws over a window of
/// evenly spaced snapshots, on interior nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuityResiduals {
    /// `hbar |d_t rho + d_x j|`
    pub charge: f64,
    /// `hbar |d_t rho_E + d_x j_E - S_t |psi|^2|`
    pub energy: f64,
    /// `hbar |d_t T00 + d_x (c T10) - S_t |psi|^2|`
    pub tensor_energy: f64,
    /// `|(1/c) d_t T01 + d_x T11 - S_x |psi|^2|` with `T01 = -T10`
    pub tensor_momentum: f64,
    pub energy_no_source: f64,
    pub tensor_energy_no_source: f64,
    pub tensor_momentum_no_source: f64,
}

pub fn continuity_residuals(window: &[KfgState], k: &KineticMatrix) -> Result<ContinuityResiduals> {
    if window.len() < 3 {
        return Err(Error::InsufficientData { needed: 3, got: window.len() });
    }
    let dt = window[1].t - window[0].t;
    if !(dt > 0.0) || window.windows(2).any(|w| ((w[1].t - w[0].t) - dt).abs() > 1e-9 * dt.max(1.0)) {
        return Err(Error::InvalidState("snapshots must be evenly spaced in time"));
    }
    let fields: Vec<ObservableFields> = window.iter().map(|s| local_fields(s, k)).collect::<Result<_>>()?;
    let u = *k.units();
    let (hbar, c) = (u.hbar, u.c);
    let g = *k.grid();
    let (n, dx) = (g.n(), g.dx());
    let pot = k.potential();
    let mut r = ContinuityResiduals {
        charge: 0.0,
        energy: 0.0,
        tensor_energy: 0.0,
        tensor_momentum: 0.0,
        energy_no_source: 0.0,
        tensor_energy_no_source: 0.0,
        tensor_momentum_no_source: 0.0,
    };
    for s in 1..window.len() - 1 {
        let (prev, cur, next) = (&fields[s - 1], &fields[s], &fields[s + 1]);
        let t = window[s].t;
        for i in 1..n - 1 {
            let x = g.x(i);
            let p2 = window[s].psi[i].norm_sqr();
            let s_t = pot.dt(x, t) * p2;
            let s_x = pot.dx(x, t) * p2;
            let ddt = |f: fn(&ObservableFields) -> &Vec<num_complex::Complex64>| (f(next)[i] - f(prev)[i]) / (2.0 * dt);
            let ddx = |v: &[num_complex::Complex64]| (v[i + 1] - v[i - 1]) / (2.0 * dx);
            let charge = hbar * (ddt(|f| &f.rho) + ddx(&cur.j)).norm();
            let en = ddt(|f| &f.rho_e) + ddx(&cur.j_e);
            let te = ddt(|f| &f.t00).re + ddx(&cur.ct10).re;
            let tm = -ddt(|f| &f.ct10).re / (c * c) + ddx(&cur.t11).re;
            r.charge = r.charge.max(charge);
            r.energy = r.energy.max(hbar * (en - s_t).norm());
            r.energy_no_source = r.energy_no_source.max(hbar * en.norm());
            r.tensor_energy = r.tensor_energy.max(hbar * (te - s_t).abs());
            r.tensor_energy_no_source = r.tensor_energy_no_source.max(hbar * te.abs());
            r.tensor_momentum = r.tensor_momentum.max((tm - s_x).abs());
            r.tensor_momentum_no_source = r.tensor_momentum_no_source.max(tm.abs());
        }
    }
    Ok(r)
}
