use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use walecki::census::{census, profile_report};
use walecki::symmetry::{are_isomorphic, automorphism_group};
use walecki::verify::{run_all, VerifyOptions};
use walecki::{build_tournament, Signature};

/// Worker count for parallel sweeps; defaults to the available parallelism.
const WORKERS_ENV: &str = "WALECKI_WORKERS";

#[derive(Parser)]
#[command(name = "walecki", version, about = "Walecki tournament census and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-arc triangle CSV and automorphism group of W_u.
    Profile { signature: Signature },
    /// One row per signature of length m, followed by a key=value summary.
    Census {
        m: usize,
        /// Write the rows to this file instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Decide whether W_u and W_v are isomorphic and print a witness.
    Iso { u: Signature, v: Signature },
    /// Automorphism group of W_u.
    Aut { signature: Signature },
    /// Run every verification criterion.
    Verify {
        /// Smaller sweeps.
        #[arg(long)]
        quick: bool,
    },
    /// Graphviz export of W_u.
    Dot {
        signature: Signature,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn configure_workers() -> Result<(), Failure> {
    let Ok(value) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let workers: usize = value
        .parse()
        .map_err(|_| Failure::Usage(format!("{WORKERS_ENV} must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(workers).build_global()?;
    Ok(())
}

fn write_or_print(path: Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(path) => fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_workers()?;
    match cli.command {
        Command::Profile { signature } => print!("{}", profile_report(&signature)?),
        Command::Census { m, csv } => {
            let result = census(m)?;
            write_or_print(csv, &result.to_csv())?;
            print!("{}", result.summary);
        }
        Command::Iso { u, v } => {
            let (t1, t2) = (build_tournament(&u)?, build_tournament(&v)?);
            match are_isomorphic(&t1, &t2)? {
                Some(p) => {
                    println!("isomorphic=true");
                    println!("witness={p}");
                    println!("witness_cycles={}", p.cycle_notation());
                    println!("star_to_star={}", p.apply(t1.star()) == t2.star());
                }
                None => println!("isomorphic=false"),
            }
        }
        Command::Aut { signature } => {
            print!("{}", automorphism_group(&build_tournament(&signature)?));
        }
        Command::Verify { quick } => {
            let outcomes = run_all(&VerifyOptions { quick });
            for o in &outcomes {
                println!("{o}");
            }
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            println!("criteria={} passed={} failed={failed}", outcomes.len(), outcomes.len() - failed);
            if failed > 0 {
                return Err(Failure::Verification);
            }
        }
        Command::Dot { signature, out } => {
            write_or_print(out, &build_tournament(&signature)?.to_dot())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
