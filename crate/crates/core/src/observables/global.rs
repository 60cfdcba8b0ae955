use num_complex::Complex64;

use super::boundary::{boundary_j, boundary_j_e, boundary_jtilde_e, EndValues, JTildeEnds};
use super::fields::{fields_from_jet, Jet};
use crate::bc::BcParams;
use crate::model::KfgState;
use crate::operator::KineticMatrix;
use crate::Result;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The five pieces of the mean energy; their sum equals `energy_mean`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivityTerms {
    pub surface: f64,
    pub kinetic: f64,
    pub mass: f64,
    pub energy_derivative: f64,
    pub potential: f64,
}

impl PositivityTerms {
    pub fn total(&self) -> f64 {
        self.surface + self.kinetic + self.mass + self.energy_derivative + self.potential
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GlobalSummary {
    pub t: f64,
    pub norm: f64,
    pub energy_mean: Complex64,
    pub momentum_mean: Complex64,
    pub j_e_integral: Complex64,
    pub j_tilde_e_integral: f64,
    pub t00_integral: f64,
    pub boundary_j: EndValues,
    pub boundary_j_e: EndValues,
    pub boundary_jtilde_e: JTildeEnds,
    pub surface_term: f64,
    pub positivity: PositivityTerms,
    /// `|Re energy_mean - surface_term - t00_integral|`
    pub eq39_residual: f64,
    /// `|J_E - (hbar/2m) [Im(psi* E psi)]_a^b - J~_E|`
    pub eq73_residual: f64,
}

/// Global integrals of a state.
///
/// Densities are integrated with the trapezoid weights; products of
/// derivatives use edge midpoints so the discrete identities telescope.
pub fn global_summary(state: &KfgState, k: &KineticMatrix, params: &BcParams) -> Result<GlobalSummary> {
    let jet = Jet::new(state, k)?;
    let u = *k.units();
    let (hbar, m, c, mc2) = (u.hbar, u.mass, u.c, u.mc2());
    let f = fields_from_jet(&jet, &u, state.t);
    let w = k.grid().weights();
    let dx = k.grid().dx();
    let n = jet.psi.len();

    let quad = |v: &[Complex64]| -> Complex64 { v.iter().zip(&w).map(|(a, b)| a * b).sum() };
    let norm = quad(&f.rho).re;
    let energy_mean = quad(&f.rho_e);

    let mut kin = 0.0;
    let mut j_e = Complex64::new(0.0, 0.0);
    let mut j_tilde = 0.0;
    let mut momentum = Complex64::new(0.0, 0.0);
    for i in 0..n - 1 {
        let p = 0.5 * (jet.psi[i] + jet.psi[i + 1]);
        let e = I * hbar * 0.5 * (jet.psi_t[i] + jet.psi_t[i + 1]);
        let dp = (jet.psi[i + 1] - jet.psi[i]) / dx;
        let cp = -I * hbar * c * dp;
        let cpe = hbar * hbar * c * (jet.psi_t[i + 1] - jet.psi_t[i]) / dx;
        kin += dx * dp.norm_sqr();
        j_e += dx * (p.conj() * cpe + cp.conj() * e) / (2.0 * m * c);
        j_tilde += dx * (e.conj() * cp).re / (m * c);
        momentum += dx * (p.conj() * cpe + e.conj() * cp) / (2.0 * mc2);
    }

    let mut mass = 0.0;
    let mut e_der = 0.0;
    let mut pot = 0.0;
    for i in 0..n {
        let p2 = jet.psi[i].norm_sqr();
        mass += w[i] * p2;
        e_der += w[i] * hbar * hbar * jet.psi_t[i].norm_sqr();
        pot += w[i] * jet.s[i] * p2;
    }
    let last = n - 1;
    let re_end = |i: usize| (jet.psi[i].conj() * jet.dpsi[i]).re;
    let surface = -(hbar * hbar / (2.0 * m)) * (re_end(last) - re_end(0));
    let positivity = PositivityTerms {
        surface,
        kinetic: hbar * hbar / (2.0 * m) * kin,
        mass: 0.5 * mc2 * mass,
        energy_derivative: e_der / (2.0 * mc2),
        potential: pot,
    };
    let t00_integral = positivity.total() - surface;
    let im_end = |i: usize| (jet.psi[i].conj() * I * hbar * jet.psi_t[i]).im;
    let eq73 = j_e - hbar / (2.0 * m) * (im_end(last) - im_end(0)) - j_tilde;

    Ok(GlobalSummary {
        t: state.t,
        norm,
        energy_mean,
        momentum_mean: momentum,
        j_e_integral: j_e,
        j_tilde_e_integral: j_tilde,
        t00_integral,
        boundary_j: boundary_j(state, k, params)?,
        boundary_j_e: boundary_j_e(state, k, params)?,
        boundary_jtilde_e: boundary_jtilde_e(state, k)?,
        surface_term: surface,
        positivity,
        eq39_residual: (energy_mean.re - surface - t00_integral).abs(),
        eq73_residual: eq73.norm(),
    })
}
