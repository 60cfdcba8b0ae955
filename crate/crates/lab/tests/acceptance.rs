use std::time::Instant;

use kfgm_lab::verify::{
    boundary_energy_currents, continuity_convergence, dual_path_agreement, four_confining_solutions,
    free_spectra_second_order, majorana_triviality, metric_and_energy_conservation, positivity_and_identities,
    pseudo_self_adjointness, CheckResult,
};
use kfgm_lab::Result;

type Check = fn() -> Result<CheckResult>;

const CRITERIA: [(&str, Check); 9] = [
    ("C1 bc algebra", four_confining_solutions),
    ("C2 pseudo self-adjointness", pseudo_self_adjointness),
    ("C3 spectra", free_spectra_second_order),
    ("C4 conservation", metric_and_energy_conservation),
    ("C5 majorana triviality", majorana_triviality),
    ("C6 boundary currents", boundary_energy_currents),
    ("C7 positivity and decompositions", positivity_and_identities),
    ("C8 continuity convergence", continuity_convergence),
    ("C9 dual-path oracle", dual_path_agreement),
];

fn main() {
    let mut failed = Vec::new();
    for (label, f) in CRITERIA {
        let start = Instant::now();
        let line = match f() {
            Ok(c) => {
                if !c.passed {
                    failed.push(label);
                }
                format!(
                    "{} {label}: measured={:.3e} tol={:.1e} [{}] ({:.2}s)",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.measured,
                    c.tolerance,
                    c.detail,
                    start.elapsed().as_secs_f64()
                )
            }
            Err(e) => {
                failed.push(label);
                format!("FAIL {label}: error {e}")
            }
        };
        println!("{line}");
    }
    println!("acceptance: {} of {} criteria pass", CRITERIA.len() - failed.len(), CRITERIA.len());
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
