use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use maxspan::project_file::{solve_project, ProblemKind, ProjectFile, RunOptions, Status};

/// Maximum-spread schedules for projects with start-finish and start-start
/// precedence lags.
///
/// Exit status: 0 ok, 2 infeasible constraints, 3 invalid input, 4 unreadable
/// or unparsable input.
#[derive(Debug, Parser)]
#[command(name = "maxspan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Maximize the spread of completion times under start-finish lags.
    Sf(Args),
    /// Maximize the spread of initiation times under start-start lags.
    Ss(Args),
    /// Maximize the spread of completion times under both kinds of lags.
    Combined(Args),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, clap::Args)]
struct Args {
    /// Project file (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Time shift applied to the reported schedules.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    /// Emit only the optimum and the latest schedules.
    #[arg(long)]
    latest: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

const EXIT_INFEASIBLE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_PARSE: u8 = 4;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(EXIT_PARSE) } else { ExitCode::SUCCESS };
        }
    };
    let (kind, args) = match cli.command {
        Command::Sf(args) => (ProblemKind::StartFinish, args),
        Command::Ss(args) => (ProblemKind::StartStart, args),
        Command::Combined(args) => (ProblemKind::Combined, args),
    };
    run(kind, &args)
}

fn run(kind: ProblemKind, args: &Args) -> ExitCode {
    let text = match std::fs::read_to_string(&args.input) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read {}: {err}", args.input.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let file = match ProjectFile::parse(&text) {
        Ok(file) => file,
        Err(err) => {
            eprintln!("error: {}: {err}", args.input.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let doc = match file.to_project() {
        Ok(project) => {
            let opts = RunOptions { alpha: args.alpha, latest_only: args.latest };
            solve_project(kind, &project, &opts)
        }
        Err(err) => maxspan::project_file::ResultDocument::failure(&err),
    };
    match args.format {
        Format::Json => print!("{}", doc.to_json()),
        Format::Text => print!("{}", doc.to_text()),
    }
    if let Some(msg) = &doc.message {
        eprintln!("error: {msg}");
    }
    match doc.status {
        Status::Ok => ExitCode::SUCCESS,
        Status::Infeasible => ExitCode::from(EXIT_INFEASIBLE),
        Status::InvalidInput => ExitCode::from(EXIT_INVALID),
    }
}
