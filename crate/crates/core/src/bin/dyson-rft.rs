use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dyson_rft::scenario::{compare_files, list_bundled, resolve, run_scenario};
use dyson_rft::Error;

#[derive(Parser)]
#[command(name = "dyson-rft", version, about = "Transition amplitudes by recursive Fourier-transform convolution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file (or a bundled scenario by name).
    Run {
        scenario: String,
        /// Output directory; defaults to `out/<scenario name>`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        quiet: bool,
    },
    /// Compare two output tables, the second taken as reference.
    Compare { a: PathBuf, b: PathBuf },
    /// List the bundled scenarios.
    ListScenarios,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::NonFinite(_) => 4,
        e if e.is_invariant_violation() => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { scenario, out, quiet } => resolve(&scenario).and_then(|(cfg, text)| {
            let out = out.unwrap_or_else(|| PathBuf::from("out").join(&cfg.name));
            let summary = run_scenario(&cfg, &text, &out)?;
            if !quiet {
                for (task, secs) in &summary.runtimes {
                    println!("{task:<24} {secs:>10.4} s");
                }
                for r in &summary.reports {
                    print!("{}", r.to_text(true));
                }
                println!("wrote {} files to {}", summary.outputs.len() + 1, out.display());
            }
            Ok(())
        }),
        Command::Compare { a, b } => compare_files(&a, &b).map(|r| print!("{}", r.to_text(false))),
        Command::ListScenarios => list_bundled().map(|list| {
            for (name, description) in list {
                println!("{name:<20} {description}");
            }
        }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
