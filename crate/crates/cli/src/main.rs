use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tropvar::cli::{
    cmd_curvebasis, cmd_monomial, cmd_prevariety, cmd_startingcone, cmd_traverse, CliError, Output, TraverseFlags,
};

#[derive(Parser)]
#[command(name = "tropvar", version, about = "Tropical varieties of polynomial ideals")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a Groebner cone pair on the tropical variety and print it.
    Startingcone {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Traverse the tropical variety from a starting cone pair.
    Traverse {
        /// Use the permutations listed after the pair.
        #[arg(long)]
        symmetry: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for neighbor expansion.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also print the slice where the first coordinate is 1.
        #[arg(long)]
        restrict_northern: bool,
        /// Recompute the prevariety from scratch after each new witness.
        #[arg(long)]
        full_restart: bool,
    },
    /// Common refinement of the tropical hypersurfaces of the input.
    Prevariety,
    /// Tropical basis of a curve ideal.
    Curvebasis {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A monomial in the ideal, or "no".
    Monomial,
}

fn run(cmd: Command, input: &str) -> Result<Output, CliError> {
    match cmd {
        Command::Startingcone { seed } => cmd_startingcone(input, seed),
        Command::Traverse { symmetry, seed, jobs, restrict_northern, full_restart } => cmd_traverse(
            input,
            &TraverseFlags { symmetry, seed, jobs: jobs.max(1), restrict_northern, full_restart },
        ),
        Command::Prevariety => cmd_prevariety(input),
        Command::Curvebasis { seed } => cmd_curvebasis(input, seed),
        Command::Monomial => cmd_monomial(input),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut input = String::new();
    if let Err(e) = io::stdin().read_to_string(&mut input) {
        eprintln!("error: reading standard input: {e}");
        return ExitCode::from(2);
    }
    match run(args.command, &input) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
