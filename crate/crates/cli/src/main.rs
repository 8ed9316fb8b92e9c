use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use hopf_ore_cli::error::CliError;
use hopf_ore_cli::report::{invalid_document, Status};
use hopf_ore_cli::{execute, parse_config, Overrides};

/// Verify claims about a Hopf-Ore extension kG(θ, a, δ) described by a JSON
/// job. Exit code 0: verified; 1: a check failed (witness in the report);
/// 2: invalid input.
#[derive(Debug, Parser)]
#[command(name = "hopfore", version)]
struct Args {
    /// Job document; read from stdin when absent.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Replace `job.command`.
    #[arg(long)]
    command: Option<String>,
    /// Replace `job.degree` (classify, hopf-check, skew-primitives, quotient).
    #[arg(long)]
    degree: Option<u32>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads for the parallel checks.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
            Ok(s)
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> bool {
    match output {
        Some(p) => match std::fs::write(p, text) {
            Ok(()) => true,
            Err(e) => {
                eprintln!("hopfore: cannot write {}: {e}", p.display());
                false
            }
        },
        None => {
            print!("{text}");
            true
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let start = Instant::now();
    if args.threads == 0 {
        eprintln!("hopfore: --threads must be at least 1");
        return ExitCode::from(2);
    }
    // The global pool can only be built once; a failure means it already exists.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(args.threads).build_global();

    let overrides = Overrides { command: args.command.clone(), degree: args.degree };
    let outcome =
        read_input(args.config.as_ref()).and_then(|text| parse_config(&text, &overrides)).and_then(|cfg| execute(&cfg));
    let (text, status) = match outcome {
        Ok(report) => (report.to_json(), report.status),
        Err(e) => {
            eprintln!("hopfore: {e}");
            (invalid_document(&e), Status::Invalid)
        }
    };
    eprintln!("hopfore: {:?} in {:.3}s", status, start.elapsed().as_secs_f64());
    if !emit(&text, args.output.as_ref()) {
        return ExitCode::from(2);
    }
    ExitCode::from(status.exit_code() as u8)
}
