use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kfgm_lab::{run_all, run_classify, run_enumerate, run_evolve, run_spectrum, run_verify, ExperimentConfig, LabError};

#[derive(Parser)]
#[command(name = "kfgm", version, about = "Klein-Fock-Gordon boundary-condition experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the configured boundary condition (JSON on stdout).
    Classify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the spectrum of the configured operator as CSV.
    Spectrum {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Evolve the configured initial state and write summary and field CSVs.
    Evolve {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Enumerate confining members satisfying the reality condition.
    EnumerateConfining {
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one verification suite, or all of them.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write(dir: &Path, name: &str, body: &str) -> Result<(), LabError> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join(name), body)?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool, LabError> {
    match cli.command {
        Command::Classify { config, out } => {
            let cfg = ExperimentConfig::load(&config)?;
            let json = serde_json::to_string_pretty(&run_classify(&cfg)?)? + "\n";
            if let Some(dir) = out {
                write(&dir, &cfg.output.report, &json)?;
            }
            print!("{json}");
        }
        Command::Spectrum { config, out } => {
            let cfg = ExperimentConfig::load(&config)?;
            write(&out, &cfg.output.spectrum, &run_spectrum(&cfg)?)?;
        }
        Command::Evolve { config, out } => {
            let cfg = ExperimentConfig::load(&config)?;
            let r = run_evolve(&cfg)?;
            write(&out, &cfg.output.summary, &r.summary)?;
            write(&out, &cfg.output.fields, &r.fields)?;
            let t = &r.trajectory;
            println!(
                "snapshots={} norm_drift={:e} energy_drift={:e} indefinite_spectrum={}",
                t.snapshots.len(),
                t.max_norm_drift(),
                t.max_energy_drift(),
                t.indefinite_spectrum
            );
        }
        Command::EnumerateConfining { samples, tol, out } => {
            let table = run_enumerate(samples, tol)?;
            match out {
                Some(dir) => write(&dir, "confining.csv", &table)?,
                None => print!("{table}"),
            }
        }
        Command::Verify { suite, out } => {
            let results = if suite == "all" { run_all()? } else { vec![run_verify(&suite)?] };
            let json = serde_json::to_string_pretty(&results)? + "\n";
            if let Some(dir) = out {
                write(&dir, &format!("verify_{suite}.json"), &json)?;
            }
            print!("{json}");
            return Ok(results.iter().all(|r| r.passed()));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("kfgm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
