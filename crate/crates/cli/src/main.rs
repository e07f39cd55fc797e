use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(name = "flagcx", version, about = "Face numbers of flag simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    /// Balanced vertex-decomposable complex whose h-vector is f of the input
    Polarize,
    /// Complex whose f-vector is h of a vertex-decomposable flag input
    H2f,
    /// Flag complex on d vertices whose f-vector is h of the input
    Quotient,
}

#[derive(Subcommand)]
enum Command {
    /// Face numbers, homology and decomposability of a complex
    Analyze {
        file: PathBuf,
        /// Characteristic of the coefficient field: 0 or a prime
        #[arg(long, default_value = "0")]
        field: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Read the file as a graph (one edge per line) and analyze its
        /// independence complex
        #[arg(long)]
        graph: bool,
    },
    /// Build a derived complex and check what it should satisfy
    Construct {
        #[arg(value_enum)]
        kind: Construction,
        file: PathBuf,
        #[arg(long)]
        graph: bool,
    },
    /// Kruskal-Katona test of a sequence (f_{-1}, f_0, ..)
    Kk {
        #[arg(required = true, num_args = 1..)]
        seq: Vec<String>,
    },
    /// Coefficients of 1 / sum (-1)^i h_i z^i
    Poincare {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        h: Vec<String>,
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
    /// Exhaustive survey over all graphs on at most N vertices
    Survey {
        #[arg(long)]
        max_vertices: usize,
        /// Worker threads; defaults to the machine's parallelism
        #[arg(long, env = "FLAGCX_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
}

/// Exit status of a command that ran to completion.
enum Status {
    Ok,
    VerificationFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            file,
            field,
            format,
            graph,
        } => commands::analyze(&file, &field, format, graph),
        Command::Construct { kind, file, graph } => commands::construct(kind, &file, graph),
        Command::Kk { seq } => commands::kk(&seq),
        Command::Poincare { h, terms } => commands::poincare(&h, terms),
        Command::Survey {
            max_vertices,
            jobs,
            out,
            format,
        } => commands::survey(max_vertices, jobs, &out, format),
    };
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
