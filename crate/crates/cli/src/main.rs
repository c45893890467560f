use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use posetlab_cli::commands::{self, CommandOutput, Property};

/// Graded posets, their multichain posets, and rank-profile properties.
#[derive(Parser)]
#[command(name = "posetlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Size, Whitney numbers and every property verdict.
    Report {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Hasse diagram in DOT format.
    Dot {
        expr: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Whitney numbers of a graded poset.
    Whitney { expr: String },
    /// Test one property; exits 1 with a witness when it fails.
    Check {
        expr: String,
        #[arg(long, value_enum)]
        property: Property,
    },
    /// Run the verification suite.
    VerifyPaper,
    /// Decide whether two posets are isomorphic.
    Iso { left: String, right: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out: CommandOutput = match &cli.command {
        Command::Report { expr, json } => commands::report(expr, *json),
        Command::Dot { expr, output } => commands::dot(expr, output.as_deref()),
        Command::Whitney { expr } => commands::whitney(expr),
        Command::Check { expr, property } => commands::check(expr, *property),
        Command::VerifyPaper => commands::verify_paper(),
        Command::Iso { left, right } => commands::iso(left, right),
    };
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
