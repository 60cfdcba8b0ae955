//! Cayley (Crank-Nicolson) stepping of the Feshbach-Villars equation.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::model::{fv_to_kfg, kfg_to_fv, FvState, KfgState, MajoranaKind};
use crate::observables::local_fields;
use crate::operator::{spectrum, BandLu, DiscreteHamiltonian, KineticMatrix};
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);
const PIVOT_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionConfig {
    pub dt: f64,
    pub steps: usize,
    pub record_every: usize,
}

impl EvolutionConfig {
    pub fn new(dt: f64, steps: usize, record_every: usize) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::InvalidConfig("dt must be positive"));
        }
        if steps == 0 {
            return Err(Error::InvalidConfig("steps must be at least 1"));
        }
        if record_every == 0 {
            return Err(Error::InvalidConfig("record_every must be at least 1"));
        }
        Ok(Self { dt, steps, record_every })
    }
}

/// One Cayley step `(1 + i dt h / 2hbar)^-1 (1 - i dt h / 2hbar)` with a
/// fixed Hamiltonian, factored once.
///
/// Works in `u = psi1 + psi2`, `w = psi1 - psi2`, where the step reduces to
/// one solve with `1 + kappa^2 K`.
#[derive(Debug, Clone)]
pub struct CayleyPropagator {
    kinetic: KineticMatrix,
    lu: BandLu,
    dt: f64,
}

impl CayleyPropagator {
    pub fn new(kinetic: KineticMatrix, dt: f64) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::InvalidConfig("dt must be positive"));
        }
        let kappa = dt / (2.0 * kinetic.units().hbar);
        let mut a = kinetic.symmetric().clone();
        for (i, j) in a.pattern() {
            *a.slot(i, j).unwrap() *= kappa * kappa;
        }
        for d in a.diag.iter_mut() {
            *d += 1.0;
        }
        let lu = BandLu::factor(&a, PIVOT_TOL).ok_or(Error::SingularPropagator)?;
        Ok(Self { kinetic, lu, dt })
    }

    pub fn kinetic(&self) -> &KineticMatrix {
        &self.kinetic
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    /// Advances a conforming state by `dt`.
    pub fn step(&self, state: &KfgState) -> Result<KfgState> {
        let k = &self.kinetic;
        if state.len() != k.grid().n() {
            return Err(Error::InvalidState("state length does not match the grid"));
        }
        let units = k.units();
        let (hbar, mc2) = (units.hbar, units.mc2());
        let kappa = self.dt / (2.0 * hbar);
        let sw = k.sqrt_weights();
        let closure = k.closure();
        let mut u = closure.gather(&state.psi);
        let mut w = closure.gather(&state.psi_t);
        for (i, s) in sw.iter().enumerate() {
            u[i] *= s;
            w[i] *= I * hbar / mc2 * s;
        }
        let ku = k.symmetric().matvec(&u);
        let r_w: Vec<Complex64> = w.iter().zip(&ku).map(|(w, ku)| w - I * kappa * ku / mc2).collect();
        let rhs: Vec<Complex64> =
            u.iter().zip(&w).zip(&r_w).map(|((u, w), rw)| u - I * kappa * mc2 * w - I * kappa * mc2 * rw).collect();
        let u1 = self.lu.solve(&rhs);
        let ku1 = k.symmetric().matvec(&u1);
        let f = mc2 / (I * hbar);
        let mut psi = Vec::with_capacity(u1.len());
        let mut psi_t = Vec::with_capacity(u1.len());
        for i in 0..u1.len() {
            let w1 = r_w[i] - I * kappa * ku1[i] / mc2;
            psi.push(u1[i] / sw[i]);
            psi_t.push(f * w1 / sw[i]);
        }
        let (psi, psi_t) = (closure.scatter(&psi), closure.scatter(&psi_t));
        if psi.iter().chain(&psi_t).any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::SingularPropagator);
        }
        Ok(KfgState { psi, psi_t, t: state.t + self.dt, kind: state.kind })
    }
}

/// Single step of a two-component state under `h`.
pub fn step_cayley(state: &FvState, h: &DiscreteHamiltonian, dt: f64) -> Result<FvState> {
    let units = *h.kinetic().units();
    let kfg = fv_to_kfg(state, &units)?;
    let next = CayleyPropagator::new(h.kinetic().clone(), dt)?.step(&kfg)?;
    kfg_to_fv(&next, &units)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub step: usize,
    pub t: f64,
    pub state: KfgState,
    /// `<<Psi, Psi>>`
    pub norm: f64,
    /// `<<Psi, h Psi>>`
    pub energy: Complex64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub config: EvolutionConfig,
    pub snapshots: Vec<Snapshot>,
    /// The operator at the initial time has an eigenvalue `E^2 < 0`.
    pub indefinite_spectrum: bool,
}

impl Trajectory {
    pub fn states(&self) -> impl Iterator<Item = &KfgState> {
        self.snapshots.iter().map(|s| &s.state)
    }

    pub fn max_norm_drift(&self) -> f64 {
        let n0 = self.snapshots[0].norm;
        self.snapshots.iter().map(|s| (s.norm - n0).abs()).fold(0.0, f64::max)
    }

    pub fn max_energy_drift(&self) -> f64 {
        let e0 = self.snapshots[0].energy;
        self.snapshots.iter().map(|s| (s.energy - e0).norm()).fold(0.0, f64::max)
    }
}

fn snapshot(step: usize, state: KfgState, k: &KineticMatrix) -> Result<Snapshot> {
    let f = local_fields(&state, k)?;
    let w = k.grid().weights();
    let norm = f.rho.iter().zip(&w).map(|(r, w)| r.re * w).sum();
    let energy = f.rho_e.iter().zip(&w).map(|(r, w)| r * w).sum();
    Ok(Snapshot { step, t: state.t, state, norm, energy })
}

/// Steps `initial` under the operator family of `kinetic`, resampling the
/// potential at each step midpoint when it depends on time.
pub fn evolve(initial: &KfgState, kinetic: &KineticMatrix, config: &EvolutionConfig) -> Result<Trajectory> {
    let config = EvolutionConfig::new(config.dt, config.steps, config.record_every)?;
    let k0 = kinetic.at_time(initial.t)?;
    let indefinite_spectrum = spectrum(&k0)?.first().is_some_and(|e| *e < 0.0);
    let mut snapshots = Vec::with_capacity(config.steps / config.record_every + 2);
    snapshots.push(snapshot(0, initial.clone(), &k0)?);
    let is_static = kinetic.potential().is_static();
    let mut prop = if is_static { Some(CayleyPropagator::new(k0, config.dt)?) } else { None };
    let mut state = initial.clone();
    for step in 1..=config.steps {
        if !is_static {
            let mid = initial.t + (step as f64 - 0.5) * config.dt;
            prop = Some(CayleyPropagator::new(kinetic.at_time(mid)?, config.dt)?);
        }
        let p = prop.as_ref().expect("propagator is set");
        state = p.step(&state)?;
        state.t = initial.t + step as f64 * config.dt;
        if step % config.record_every == 0 || step == config.steps {
            snapshots.push(snapshot(step, state.clone(), &kinetic.at_time(state.t)?)?);
        }
    }
    Ok(Trajectory { config, snapshots, indefinite_spectrum })
}

fn sign_of(kind: MajoranaKind) -> f64 {
    if kind == MajoranaKind::Minus {
        -1.0
    } else {
        1.0
    }
}

/// Largest relative charge-conjugation defect `|Psi -+ tau1 Psi*| / |Psi|`
/// seen while stepping; the sign follows the state's tag (plus when untagged).
pub fn check_majorana_preservation(state: &KfgState, kinetic: &KineticMatrix, dt: f64, steps: usize) -> Result<f64> {
    let sign = sign_of(state.kind);
    let units = *kinetic.units();
    let defect = |s: &KfgState| -> Result<f64> {
        let fv = kfg_to_fv(s, &units)?;
        let n = fv.l2();
        Ok(if n == 0.0 { 0.0 } else { fv.charge_conjugation_defect(sign) / n })
    };
    let traj = evolve(state, kinetic, &EvolutionConfig::new(dt, steps, 1)?)?;
    let worst = traj.states().try_fold(0.0f64, |m, s| Ok::<_, Error>(m.max(defect(s)?)))?;
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bc::{realize, CatalogTag};
    use crate::model::{Grid, PhysicalUnits, ScalarPotential, SpatialProfile, TimeFactor};
    use crate::operator::{assemble_fv_hamiltonian, assemble_kinetic, eigenmodes, synthesize_state, ModeCoefficient};
    use core::f64::consts::PI;

    fn kin(tag: CatalogTag, n: usize, pot: ScalarPotential) -> KineticMatrix {
        let g = Grid::new(0.0, 1.0, n).unwrap();
        assemble_kinetic(&g, &pot, 0.0, &realize(&tag.params(1.0)).unwrap(), &PhysicalUnits::default()).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(EvolutionConfig::new(0.0, 1, 1).is_err());
        assert!(EvolutionConfig::new(0.1, 0, 1).is_err());
        assert!(EvolutionConfig::new(0.1, 1, 0).is_err());
        let k = kin(CatalogTag::Dirichlet, 16, ScalarPotential::zero());
        let t = evolve(&KfgState::zeros(16, 0.0), &k, &EvolutionConfig::new(0.1, 1, 1).unwrap()).unwrap();
        assert_eq!(t.snapshots.len(), 2);
        let t = evolve(&KfgState::zeros(16, 0.0), &k, &EvolutionConfig::new(0.1, 10, 3).unwrap()).unwrap();
        assert_eq!(t.snapshots.iter().map(|s| s.step).collect::<Vec<_>>(), [0, 3, 6, 9, 10]);
    }

    #[test]
    fn rest_mass_phases() {
        let k = kin(CatalogTag::Neumann, 16, ScalarPotential::zero());
        let h = assemble_fv_hamiltonian(&k).unwrap();
        let one = alloc::vec![Complex64::new(1.0, 0.0); 16];
        let zero = alloc::vec![Complex64::new(0.0, 0.0); 16];
        let dt = 0.1;
        let kappa = dt / 2.0;
        let ph = Complex64::new(1.0, -kappa) / Complex64::new(1.0, kappa);
        let up = step_cayley(&FvState { psi1: one.clone(), psi2: zero.clone(), t: 0.0 }, &h, dt).unwrap();
        let down = step_cayley(&FvState { psi1: zero, psi2: one, t: 0.0 }, &h, dt).unwrap();
        for i in 0..16 {
            assert!((up.psi1[i] - ph).norm() < 1e-13 && up.psi2[i].norm() < 1e-13);
            assert!((down.psi2[i] - ph.conj()).norm() < 1e-13 && down.psi1[i].norm() < 1e-13);
        }
    }

    #[test]
    fn one_period_return() {
        let k = kin(CatalogTag::Dirichlet, 64, ScalarPotential::constant(0.2));
        let m = eigenmodes(&k).unwrap();
        let s0 = synthesize_state(&m, &[ModeCoefficient::new(1, 1.0, 0.0)], 0.0, MajoranaKind::None, 1.0).unwrap();
        let period = 2.0 * PI / m.modes[1].energy;
        let err = |steps: usize| {
            let t = evolve(&s0, &k, &EvolutionConfig::new(period / steps as f64, steps, steps).unwrap()).unwrap();
            let last = &t.snapshots.last().unwrap().state;
            let d: f64 = last.psi.iter().zip(&s0.psi).map(|(a, b)| (a - b).norm_sqr()).sum();
            let n: f64 = s0.psi.iter().map(|a| a.norm_sqr()).sum();
            (d / n).sqrt()
        };
        let (e1, e2) = (err(1000), err(2000));
        assert!(e1 < 1e-4, "{e1}");
        assert!(e1 / e2 > 3.6 && e1 / e2 < 4.4);
    }

    #[test]
    fn exact_conservation_and_majorana() {
        for tag in [CatalogTag::RobinMitPlus, CatalogTag::Periodic, CatalogTag::MixedX { plus: false }] {
            let k = kin(tag, 64, ScalarPotential::constant(0.1));
            let m = eigenmodes(&k).unwrap();
            let cs = [ModeCoefficient::new(0, 1.0, 0.2), ModeCoefficient::new(3, 0.5, 1.0)];
            let s = synthesize_state(&m, &cs, 0.0, MajoranaKind::None, 1.0).unwrap();
            let t = evolve(&s, &k, &EvolutionConfig::new(0.01, 2000, 500).unwrap()).unwrap();
            let n0 = t.snapshots[0].norm.abs();
            assert!(t.max_norm_drift() <= 1e-12 * n0, "{tag}");
            assert!(t.max_energy_drift() <= 1e-12 * t.snapshots[0].energy.norm(), "{tag}");
            for kind in [MajoranaKind::Plus, MajoranaKind::Minus] {
                let s = synthesize_state(&m, &cs, 0.0, kind, 1.0).unwrap();
                assert!(check_majorana_preservation(&s, &k, 0.01, 300).unwrap() <= 1e-12);
            }
            let s = synthesize_state(&m, &cs, 0.0, MajoranaKind::None, 1.0).unwrap();
            assert!(check_majorana_preservation(&s, &k, 0.01, 10).unwrap() > 0.1);
        }
    }

    #[test]
    fn driven_energy_tracks_source() {
        let pot = ScalarPotential::new(
            SpatialProfile::Quadratic { s0: 0.5, s2: 1.0, x0: 0.5 },
            TimeFactor::Sinusoidal { offset: 1.0, amplitude: 0.5, omega: 3.0, phase: 0.0 },
            false,
        )
        .unwrap();
        let k = kin(CatalogTag::Dirichlet, 128, pot.clone());
        let m = eigenmodes(&k).unwrap();
        let cs = [ModeCoefficient::new(0, 1.0, 0.2), ModeCoefficient::new(2, 0.5, 1.0)];
        let s = synthesize_state(&m, &cs, 0.0, MajoranaKind::Plus, 1.0).unwrap();
        let dt = 1e-3;
        let t = evolve(&s, &k, &EvolutionConfig::new(dt, 400, 1).unwrap()).unwrap();
        let g = *k.grid();
        let w = g.weights();
        let mut worst = 0.0f64;
        for i in 1..t.snapshots.len() - 1 {
            let de = (t.snapshots[i + 1].energy.re - t.snapshots[i - 1].energy.re) / (2.0 * dt);
            let snap = &t.snapshots[i];
            let src: f64 = (0..g.n()).map(|j| w[j] * pot.dt(g.x(j), snap.t) * snap.state.psi[j].norm_sqr()).sum();
            worst = worst.max((de - src).abs());
        }
        let scale = t.snapshots[0].energy.norm();
        assert!(worst < 1e-4 * scale, "{worst}");
        assert!(t.snapshots.last().unwrap().energy.re - t.snapshots[0].energy.re != 0.0);
    }
}
