mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::FieldArg;
use report::Report;

/// Sign-refined torsion of chain complexes, CW complexes and knot surgeries.
#[derive(Parser, Debug)]
#[command(name = "torsionlab", version)]
struct Cli {
    /// Coefficient field for the computation.
    #[arg(long, global = true, value_enum)]
    field: Option<FieldArg>,
    /// Worker threads for batch verification.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Print only the headline value (or PASS/FAIL for checks).
    #[arg(long, global = true)]
    quiet: bool,
    /// Append wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Torsion coordinate of a chain complex file.
    ChainTorsion {
        file: PathBuf,
        /// Reference bases of the chain groups.
        #[arg(long)]
        frames: Option<PathBuf>,
    },
    /// Knot diagrams in PD notation, given as a path or fixture name.
    Knot {
        #[command(subcommand)]
        command: KnotCommand,
    },
    /// Torsions of Euler structures on a twisted CW complex file.
    Cw {
        file: PathBuf,
        /// Monodromy of the line bundle.
        #[arg(long)]
        at: Option<String>,
    },
    /// Runs the full verification suite.
    Selftest {
        /// Flip the N(C) sign table (negative control).
        #[arg(long, hide = true)]
        corrupt_signs: bool,
    },
}

#[derive(Subcommand, Debug)]
enum KnotCommand {
    /// Conway polynomial from the surgery torsion.
    Conway { diagram: String },
    /// Conway polynomial by skein resolution.
    ConwaySkein { diagram: String },
    /// Alexander polynomial by Fox calculus.
    Alexander { diagram: String },
    /// Absolute torsion of the 0-surgery at monodromy `a`.
    AbsTorsion {
        diagram: String,
        #[arg(long)]
        at: Option<String>,
    },
    /// Both Conway pipelines plus realness, phase and duality checks.
    Verify {
        #[arg(required = true)]
        diagrams: Vec<String>,
    },
}

fn run(cli: &Cli) -> Result<Vec<Report>, String> {
    let one = |r: Result<Report, String>| r.map(|r| vec![r]);
    match &cli.command {
        Command::ChainTorsion { file, frames } => {
            one(commands::chain_torsion(file, frames.as_deref(), cli.field))
        }
        Command::Knot { command } => match command {
            KnotCommand::Conway { diagram } => one(commands::knot_conway(diagram)),
            KnotCommand::ConwaySkein { diagram } => one(commands::knot_conway_skein(diagram)),
            KnotCommand::Alexander { diagram } => one(commands::knot_alexander(diagram)),
            KnotCommand::AbsTorsion { diagram, at } => one(commands::knot_abs_torsion(
                diagram,
                at.as_deref(),
                cli.field,
            )),
            KnotCommand::Verify { diagrams } => commands::knot_verify(diagrams),
        },
        Command::Cw { file, at } => one(commands::cw(file, at.as_deref(), cli.field)),
        Command::Selftest { corrupt_signs } => Ok(vec![commands::selftest(*corrupt_signs)]),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(2);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let mut reports = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if cli.timing {
        if let Some(last) = reports.last_mut() {
            last.elapsed = Some(start.elapsed());
        }
    }
    let rendered: Vec<String> = reports.iter().map(|r| r.render(cli.quiet)).collect();
    print!("{}", rendered.join(if cli.quiet { "" } else { "\n" }));
    if reports.iter().all(Report::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
