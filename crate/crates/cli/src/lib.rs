//! Command-line front end. Everything except process plumbing lives here so
//! that the commands can be driven from tests without spawning a binary.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use argstab_core::formats::{load_stability_problem, parse_af_apx, parse_iaf_apx, parse_scenario, parse_tgf};
use argstab_core::nego::{run_negotiation, Outcome, Policy};
use argstab_core::{
    AcceptanceMode, ArgumentId, ArgumentationFramework, Error, Extension, NecessityMode, Semantics,
    StabilityVerdict,
};

/// Process exit status of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    /// Query true, stable verdict, or agreement.
    Yes,
    /// Query false, unstable verdict, or failure.
    No,
    /// Bad flags, unparsable input, or a problem that does not validate.
    Usage,
    /// An instance exceeded an enumeration limit.
    Guard,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Yes => 0,
            ExitStatus::No => 1,
            ExitStatus::Usage => 2,
            ExitStatus::Guard => 3,
        }
    }

    fn from_bool(b: bool) -> Self {
        if b {
            ExitStatus::Yes
        } else {
            ExitStatus::No
        }
    }
}

/// Captured result of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: ExitStatus,
}

impl Output {
    fn ok(stdout: String, status: ExitStatus) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            status,
        }
    }

    fn failure(err: CliError) -> Self {
        let status = match &err {
            CliError::Core(e) if e.is_resource_guard() => ExitStatus::Guard,
            _ => ExitStatus::Usage,
        };
        Output {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            status,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Input { path: PathBuf, source: Error },
    #[error(transparent)]
    Core(#[from] Error),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn parse_with<T>(path: &Path, parse: impl FnOnce(&str) -> argstab_core::Result<T>) -> Result<T, CliError> {
    let text = read(path)?;
    parse(&text).map_err(|source| {
        if source.is_resource_guard() {
            CliError::Core(source)
        } else {
            CliError::Input {
                path: path.to_owned(),
                source,
            }
        }
    })
}

#[derive(Debug, Parser)]
#[command(name = "argstab", version, about = "Abstract argumentation solver and stability checker")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate extensions or decide acceptance in an AF.
    Solve(SolveArgs),
    /// Decide possible or necessary acceptance in an incomplete AF.
    Iaf(IafArgs),
    /// Decide whether an argument's status can still change.
    Stability(StabilityArgs),
    /// Run a two-agent negotiation.
    Negotiate(NegotiateArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Apx,
    Tgf,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "apx")]
    pub format: Format,
    #[arg(long)]
    pub semantics: Semantics,
    #[arg(long, conflicts_with_all = ["arg", "mode"])]
    pub enumerate: bool,
    #[arg(long, requires = "mode")]
    pub arg: Option<ArgumentId>,
    #[arg(long, requires = "arg")]
    pub mode: Option<AcceptanceMode>,
}

#[derive(Debug, Args)]
pub struct IafArgs {
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long)]
    pub semantics: Semantics,
    #[arg(long)]
    pub arg: ArgumentId,
    #[arg(long)]
    pub mode: AcceptanceMode,
    #[arg(long)]
    pub necessity: NecessityMode,
}

#[derive(Debug, Args)]
pub struct StabilityArgs {
    #[arg(long)]
    pub universe: PathBuf,
    #[arg(long)]
    pub current: PathBuf,
    #[arg(long)]
    pub arg: ArgumentId,
    #[arg(long)]
    pub semantics: Semantics,
    #[arg(long)]
    pub mode: AcceptanceMode,
    /// On UNSTABLE, also print one accepting and one rejecting future AF.
    #[arg(long)]
    pub witness: bool,
}

#[derive(Debug, Args)]
pub struct NegotiateArgs {
    #[arg(long)]
    pub scenario: PathBuf,
    /// Disable the agents' stability checks.
    #[arg(long)]
    pub baseline: bool,
}

fn yes_no(b: bool) -> Output {
    Output::ok(if b { "YES\n" } else { "NO\n" }.to_string(), ExitStatus::from_bool(b))
}

fn solve(args: &SolveArgs) -> Result<Output, CliError> {
    let af: ArgumentationFramework = match args.format {
        Format::Apx => parse_with(&args.file, parse_af_apx)?,
        Format::Tgf => parse_with(&args.file, parse_tgf)?,
    };
    match (&args.arg, args.mode) {
        (Some(a), Some(mode)) => Ok(yes_no(af.accepted(a, args.semantics, mode)?)),
        _ if args.enumerate => {
            let mut out = String::new();
            for e in af.extensions(args.semantics) {
                writeln!(out, "{e}").unwrap();
            }
            Ok(Output::ok(out, ExitStatus::Yes))
        }
        _ => Ok(Output {
            stdout: String::new(),
            stderr: "error: solve needs either --enumerate or --arg with --mode\n".into(),
            status: ExitStatus::Usage,
        }),
    }
}

fn iaf(args: &IafArgs) -> Result<Output, CliError> {
    let iaf = parse_with(&args.file, parse_iaf_apx)?;
    Ok(yes_no(iaf.accepted(&args.arg, args.semantics, args.mode, args.necessity)?))
}

fn argument_set(af: &ArgumentationFramework) -> Extension {
    Extension::new(af.arguments().clone())
}

fn stability(args: &StabilityArgs) -> Result<Output, CliError> {
    let universe = read(&args.universe)?;
    let current = read(&args.current)?;
    let problem = load_stability_problem(&universe, &current, &args.arg, args.semantics, args.mode)?;
    let verdict = problem.check()?;
    let mut out = format!("{}\n", verdict.outcome().label());
    if let (true, StabilityVerdict::Unstable { accepting, rejecting }) = (args.witness, &verdict) {
        writeln!(out, "accepting: {}", argument_set(accepting)).unwrap();
        writeln!(out, "rejecting: {}", argument_set(rejecting)).unwrap();
    }
    Ok(Output::ok(out, ExitStatus::from_bool(verdict.outcome().is_stable())))
}

fn negotiate(args: &NegotiateArgs) -> Result<Output, CliError> {
    let scenario = parse_with(&args.scenario, parse_scenario)?;
    let policy = if args.baseline {
        Policy::Baseline
    } else {
        Policy::StabilityAware
    };
    let transcript = run_negotiation(&scenario, policy)?;
    let status = ExitStatus::from_bool(matches!(transcript.outcome(), Outcome::Agreement(_)));
    Ok(Output::ok(transcript.render(), status))
}

pub fn cmd_solve(args: &SolveArgs) -> Output {
    solve(args).unwrap_or_else(Output::failure)
}

pub fn cmd_iaf(args: &IafArgs) -> Output {
    iaf(args).unwrap_or_else(Output::failure)
}

pub fn cmd_stability(args: &StabilityArgs) -> Output {
    stability(args).unwrap_or_else(Output::failure)
}

pub fn cmd_negotiate(args: &NegotiateArgs) -> Output {
    negotiate(args).unwrap_or_else(Output::failure)
}

pub fn dispatch(cli: &Cli) -> Output {
    match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Iaf(a) => cmd_iaf(a),
        Command::Stability(a) => cmd_stability(a),
        Command::Negotiate(a) => cmd_negotiate(a),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => dispatch(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Output::ok(rendered, ExitStatus::Yes)
                }
                _ => Output {
                    stdout: String::new(),
                    stderr: rendered,
                    status: ExitStatus::Usage,
                },
            }
        }
    }
}
