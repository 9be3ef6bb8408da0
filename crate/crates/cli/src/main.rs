use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use omatrix_cli::catalog::CATALOG;
use omatrix_cli::{catalog, fixture, load, run, CliError, RunOptions, FIXTURES};

#[derive(Parser)]
#[command(name = "omatrix", version, about = "Exact checks of r-matrix, Poisson and Hamiltonian identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks listed in a manifest.
    Run(RunArgs),
    /// List every check name.
    ListChecks,
    /// Describe one check.
    Explain { name: String },
    /// List the bundled manifests.
    Fixtures,
    /// Print a bundled manifest.
    Fixture { name: String },
}

#[derive(Args)]
struct RunArgs {
    /// Manifest file.
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    manifest: Option<PathBuf>,
    /// Run a bundled manifest instead of a file.
    #[arg(long)]
    fixture: Option<String>,
    /// Write the JSON report to this path (`-` for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for the randomized sweeps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Highest derivative order the differential engine may create.
    #[arg(long, default_value_t = omatrix_core::diff::DEFAULT_MAX_JET_ORDER)]
    max_jet_order: u32,
    /// Nonzero defect entries reported per check.
    #[arg(long, default_value_t = 10)]
    witness_limit: usize,
    /// Include per-check wall time (makes reports non-reproducible).
    #[arg(long)]
    timings: bool,
}

fn read_manifest(args: &RunArgs) -> Result<(String, String), CliError> {
    match (&args.fixture, &args.manifest) {
        (Some(name), _) => Ok((name.clone(), fixture(name)?.to_string())),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            let label = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
            Ok((label, text))
        }
        (None, None) => unreachable!("clap requires one of them"),
    }
}

fn run_command(args: RunArgs) -> Result<u8, CliError> {
    let (label, text) = read_manifest(&args)?;
    let problem = load(&text)?;
    let opts = RunOptions {
        seed: args.seed,
        max_jet_order: args.max_jet_order,
        witness_limit: args.witness_limit,
        timings: args.timings,
    };
    let report = run(&problem, &label, &opts)?;
    match &args.json {
        Some(p) if p.as_os_str() == "-" => print!("{}", report.to_json()),
        Some(p) => {
            std::fs::write(p, report.to_json()).map_err(|source| CliError::Io { path: p.display().to_string(), source })?;
            print!("{}", report.to_text());
        }
        None => print!("{}", report.to_text()),
    }
    Ok(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run_command(args),
        Command::ListChecks => {
            let width = CATALOG.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let mut out = std::io::stdout().lock();
            for c in CATALOG {
                let _ = writeln!(out, "{:<width$}  {}", c.name, c.summary);
            }
            Ok(0)
        }
        Command::Explain { name } => catalog::find(&name).map(|(_, c)| {
            println!("{}\n  {}\n  identity: {}", c.name, c.summary, c.formula);
            let needs: Vec<&str> = c.needs.iter().map(|s| s.key()).collect();
            if !needs.is_empty() {
                println!("  sections: {}", needs.join(", "));
            }
            if !c.after.is_empty() {
                println!("  prerequisites: {}", c.after.join(", "));
            }
            if !c.operations.is_empty() {
                println!("  operations: {}", c.operations.join(", "));
            }
            0
        })
        .ok_or(CliError::UnknownCheck(name)),
        Command::Fixtures => {
            for (name, _) in FIXTURES {
                println!("{name}");
            }
            Ok(0)
        }
        Command::Fixture { name } => fixture(&name).map(|t| {
            print!("{t}");
            0
        }),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
