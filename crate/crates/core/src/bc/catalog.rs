use core::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use core::fmt;
use core::str::FromStr;

use super::{BcParams, ALGEBRA_TOL};
use crate::{Error, Result};

/// Named members (i)-(xii). Signed families carry the sign of `m1` or `m2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CatalogTag {
    Dirichlet,
    Neumann,
    MixedA0,
    MixedB0,
    RobinMitPlus,
    RobinMitMinus,
    Periodic,
    Antiperiodic,
    Rotation { plus: bool, mu: f64 },
    MixedX { plus: bool },
    Quasiperiodic { plus: bool },
    Quasimixed { plus: bool },
}

/// One representative per catalog entry; (ix) uses `mu = pi/4`.
pub const ALL_TAGS: [CatalogTag; 12] = [
    CatalogTag::Dirichlet,
    CatalogTag::Neumann,
    CatalogTag::MixedA0,
    CatalogTag::MixedB0,
    CatalogTag::RobinMitPlus,
    CatalogTag::RobinMitMinus,
    CatalogTag::Periodic,
    CatalogTag::Antiperiodic,
    CatalogTag::Rotation { plus: true, mu: FRAC_PI_4 },
    CatalogTag::MixedX { plus: true },
    CatalogTag::Quasiperiodic { plus: true },
    CatalogTag::Quasimixed { plus: true },
];

impl CatalogTag {
    /// Roman numeral of the entry.
    pub fn case(&self) -> &'static str {
        match self {
            CatalogTag::Dirichlet => "i",
            CatalogTag::Neumann => "ii",
            CatalogTag::MixedA0 => "iii",
            CatalogTag::MixedB0 => "iv",
            CatalogTag::RobinMitPlus => "v",
            CatalogTag::RobinMitMinus => "vi",
            CatalogTag::Periodic => "vii",
            CatalogTag::Antiperiodic => "viii",
            CatalogTag::Rotation { .. } => "ix",
            CatalogTag::MixedX { .. } => "x",
            CatalogTag::Quasiperiodic { .. } => "xi",
            CatalogTag::Quasimixed { .. } => "xii",
        }
    }

    pub fn params(&self, lambda: f64) -> BcParams {
        let s = |plus: bool| if plus { 1.0 } else { -1.0 };
        let (m0, m1, m2, m3, mu) = match *self {
            CatalogTag::Dirichlet => (-1.0, 0.0, 0.0, 0.0, 0.0),
            CatalogTag::Neumann => (1.0, 0.0, 0.0, 0.0, 0.0),
            CatalogTag::MixedA0 => (0.0, 0.0, 0.0, 1.0, FRAC_PI_2),
            CatalogTag::MixedB0 => (0.0, 0.0, 0.0, -1.0, FRAC_PI_2),
            CatalogTag::RobinMitPlus => (1.0, 0.0, 0.0, 0.0, FRAC_PI_2),
            CatalogTag::RobinMitMinus => (-1.0, 0.0, 0.0, 0.0, FRAC_PI_2),
            CatalogTag::Periodic => (0.0, 1.0, 0.0, 0.0, FRAC_PI_2),
            CatalogTag::Antiperiodic => (0.0, -1.0, 0.0, 0.0, FRAC_PI_2),
            CatalogTag::Rotation { plus, mu } => (0.0, s(plus), 0.0, 0.0, mu),
            CatalogTag::MixedX { plus } => (0.0, s(plus), 0.0, 0.0, 0.0),
            CatalogTag::Quasiperiodic { plus } => (0.0, 0.0, s(plus), 0.0, FRAC_PI_2),
            CatalogTag::Quasimixed { plus } => (0.0, 0.0, s(plus), 0.0, 0.0),
        };
        BcParams::new(m0, m1, m2, m3, mu, lambda).expect("catalog points lie on the unit sphere")
    }

    /// Catalog entry equal to `p` within `ALGEBRA_TOL`. Rotation members at
    /// `mu = 0` and `mu = pi/2` resolve to (x), (vii) and (viii).
    pub fn identify(p: &BcParams) -> Option<CatalogTag> {
        let fixed = [
            CatalogTag::Dirichlet,
            CatalogTag::Neumann,
            CatalogTag::MixedA0,
            CatalogTag::MixedB0,
            CatalogTag::RobinMitPlus,
            CatalogTag::RobinMitMinus,
            CatalogTag::Periodic,
            CatalogTag::Antiperiodic,
            CatalogTag::MixedX { plus: true },
            CatalogTag::MixedX { plus: false },
            CatalogTag::Quasiperiodic { plus: true },
            CatalogTag::Quasiperiodic { plus: false },
            CatalogTag::Quasimixed { plus: true },
            CatalogTag::Quasimixed { plus: false },
        ];
        if let Some(t) = fixed.into_iter().find(|t| t.params(p.lambda).approx_eq(p, ALGEBRA_TOL)) {
            return Some(t);
        }
        let on_ring = p.m0.abs() <= ALGEBRA_TOL
            && p.m2.abs() <= ALGEBRA_TOL
            && p.m3.abs() <= ALGEBRA_TOL
            && (p.m1.abs() - 1.0).abs() <= ALGEBRA_TOL;
        on_ring.then_some(CatalogTag::Rotation { plus: p.m1 > 0.0, mu: p.mu })
    }
}

impl fmt::Display for CatalogTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pm = |plus: bool| if plus { "+" } else { "-" };
        match *self {
            CatalogTag::Dirichlet => f.write_str("dirichlet"),
            CatalogTag::Neumann => f.write_str("neumann"),
            CatalogTag::MixedA0 => f.write_str("mixed_a0"),
            CatalogTag::MixedB0 => f.write_str("mixed_b0"),
            CatalogTag::RobinMitPlus => f.write_str("robin_mit_plus"),
            CatalogTag::RobinMitMinus => f.write_str("robin_mit_minus"),
            CatalogTag::Periodic => f.write_str("periodic"),
            CatalogTag::Antiperiodic => f.write_str("antiperiodic"),
            CatalogTag::Rotation { plus: true, mu } => write!(f, "rotation:{mu}"),
            CatalogTag::Rotation { plus: false, mu } => write!(f, "rotation-:{mu}"),
            CatalogTag::MixedX { plus } => write!(f, "mixed_x{}", pm(plus)),
            CatalogTag::Quasiperiodic { plus } => write!(f, "quasiperiodic{}", pm(plus)),
            CatalogTag::Quasimixed { plus } => write!(f, "quasimixed{}", pm(plus)),
        }
    }
}

impl FromStr for CatalogTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signed = |rest: &str| match rest {
            "" | "+" => Some(true),
            "-" => Some(false),
            _ => None,
        };
        let tag = match s {
            "dirichlet" => CatalogTag::Dirichlet,
            "neumann" => CatalogTag::Neumann,
            "mixed_a0" => CatalogTag::MixedA0,
            "mixed_b0" => CatalogTag::MixedB0,
            "robin_mit_plus" => CatalogTag::RobinMitPlus,
            "robin_mit_minus" => CatalogTag::RobinMitMinus,
            "periodic" => CatalogTag::Periodic,
            "antiperiodic" => CatalogTag::Antiperiodic,
            _ => {
                if let Some((head, mu)) = s.split_once(':') {
                    let plus = match head {
                        "rotation" | "rotation+" => true,
                        "rotation-" => false,
                        _ => return Err(Error::InvalidParams("unknown catalog tag")),
                    };
                    let mu: f64 = mu.parse().map_err(|_| Error::InvalidParams("bad rotation angle"))?;
                    if !mu.is_finite() {
                        return Err(Error::InvalidParams("bad rotation angle"));
                    }
                    CatalogTag::Rotation { plus, mu }
                } else if let Some(p) = s.strip_prefix("mixed_x").and_then(signed) {
                    CatalogTag::MixedX { plus: p }
                } else if let Some(p) = s.strip_prefix("quasiperiodic").and_then(signed) {
                    CatalogTag::Quasiperiodic { plus: p }
                } else if let Some(p) = s.strip_prefix("quasimixed").and_then(signed) {
                    CatalogTag::Quasimixed { plus: p }
                } else {
                    return Err(Error::InvalidParams("unknown catalog tag"));
                }
            }
        };
        Ok(tag)
    }
}
