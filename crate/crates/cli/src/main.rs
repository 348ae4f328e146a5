//! `gcentre`: command-line front end for the gcentre library.
//!
//! Exit codes: 0 on success, 1 when the input is malformed or a computation
//! is undefined, 2 when a verified identity fails.

mod commands;
mod render;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "gcentre", version, about = "Exact centres, G-centres and smash products of group-graded algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Field override: `rationals`, `cyclotomic:N` or `prime:P`.
    #[arg(long, global = true)]
    field: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Project {
    Tilting,
    AppendixB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scenario {
    AppendixB,
    DualNumbers,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate an algebra, quiver or module file.
    Validate { file: PathBuf },
    /// The classical centre Z(A).
    Centre { file: PathBuf },
    /// The G-centre Z^G(A) with its bigraded pieces.
    GCentre { file: PathBuf },
    /// The extended centre and its embedding into the G-centre.
    ExtendedCentre { file: PathBuf },
    /// Super and anti centres of a Z2-graded algebra.
    SuperCentre { file: PathBuf },
    /// The ghost centre, compared with the identity component of Z^G(A).
    Ghost { file: PathBuf },
    /// Smash product with a group action, with its isomorphism certificates.
    Smash {
        file: PathBuf,
        /// Action file, or `grading` for the action of the character group.
        #[arg(long)]
        action: String,
        /// Use the opposite multiplication `(phi_h(b) a, h + k)`.
        #[arg(long)]
        op: bool,
    },
    /// The algebra of all homogeneous endomorphisms of A, with transport checks.
    EndPi { file: PathBuf },
    /// Character table of a finite abelian group.
    Characters {
        /// Invariant factors, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        group: Vec<u64>,
    },
    /// Derived-category computations over a path algebra.
    Quiver {
        file: PathBuf,
        #[arg(long, value_enum)]
        project: Project,
        /// Range of shifts `lo,hi` checked for Hom(T, T[j]) = 0.
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<(i64, i64)>,
    },
    /// Built-in worked examples.
    Scenario {
        #[arg(value_enum)]
        name: Scenario,
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<(i64, i64)>,
    },
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected lo,hi")?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err("window is empty".into());
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let field = cli.field.as_deref();
    let result = match &cli.command {
        Command::Validate { file } => commands::validate(file, field),
        Command::Centre { file } => commands::centre(file, field),
        Command::GCentre { file } => commands::g_centre(file, field),
        Command::ExtendedCentre { file } => commands::extended_centre(file, field),
        Command::SuperCentre { file } => commands::super_centre(file, field),
        Command::Ghost { file } => commands::ghost(file, field),
        Command::Smash { file, action, op } => commands::smash(file, action, *op, field),
        Command::EndPi { file } => commands::end_pi(file, field),
        Command::Characters { group } => commands::characters(group, field),
        Command::Quiver { file, project, window } => commands::quiver(file, *project, *window, field),
        Command::Scenario { name, window } => commands::scenario(*name, *window, field),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let out = match cli.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Text => render::text(report.value()),
    };
    // a closed pipe downstream is not an error of ours
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    let failed = report.failed_checks();
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("verification failed: {}", failed.join(", "));
        ExitCode::from(2)
    }
}
