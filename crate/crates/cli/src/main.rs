use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, ValueEnum};

use branchlaw_cli::{parse_job, render, run_job, OutputFormat, EXIT_USAGE};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Machine,
}

/// Sign and multiplicity computations for unitary and general linear
/// restriction problems.
///
/// A job is a list of key=value tokens, given inline or in a file:
///
///   branchlaw epsilon case=arch a=1/2
///
///   branchlaw --input job.txt --format machine
#[derive(Debug, Parser)]
#[command(name = "branchlaw", version, verbatim_doc_comment)]
struct Cli {
    /// Job document with one or more key=value tokens per line.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Output format; overrides any format= key in the job.
    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Sweep bound for verify-all (an integer or n/2).
    #[arg(long, value_name = "N", allow_hyphen_values = true)]
    bound: Option<String>,

    /// Worker threads for parallel sweeps.
    #[arg(long, value_name = "N")]
    threads: Option<usize>,

    /// Command name followed by key=value tokens.
    #[arg(value_name = "JOB")]
    job: Vec<String>,
}

fn job_text(cli: &Cli) -> Result<String> {
    let mut text = match &cli.input {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        None => String::new(),
    };
    let mut inline: Vec<String> = cli.job.clone();
    if let Some(first) = inline.first_mut() {
        if !first.contains('=') && !first.starts_with('-') {
            *first = format!("command={first}");
        }
    }
    if let Some(bound) = &cli.bound {
        inline.push(format!("bound={bound}"));
    }
    if !inline.is_empty() {
        if !text.is_empty() {
            text.push('\n');
        }
        text.push_str(&inline.join(" "));
    }
    Ok(text)
}

fn run(cli: &Cli) -> Result<i32> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    }
    let text = job_text(cli)?;
    let mut job = match parse_job(&text) {
        Ok(job) => job,
        Err(e) => {
            let source = cli.input.as_ref().map_or("job".to_string(), |p| p.display().to_string());
            eprintln!("error: {source}: {e}");
            return Ok(EXIT_USAGE);
        }
    };
    if let Some(format) = cli.format {
        job.output_format = match format {
            Format::Table => OutputFormat::Table,
            Format::Machine => OutputFormat::Machine,
        };
    }
    match run_job(&job) {
        Ok(report) => {
            print!("{}", render(&report));
            Ok(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {} failed: {e}", job.command);
            Ok(EXIT_USAGE)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
