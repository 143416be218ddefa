//! Command-line front end.
//!
//! Data rows go to `--out` (or stdout). Summary tables go to stdout when rows
//! are written to a file and to stderr otherwise, so stdout never mixes
//! table text into CSV/JSONL. Warnings and debug progress always go to stderr.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};

use crate::corpus::{scan_corpus, CorpusScan, ScanMode};
use crate::lexer::{Language, LanguageProfile};
use crate::report::{render_summary, write_identifier_listing, write_rows, write_summary_jsonl, Format, ReportRow};
use crate::stats::aggregate_language;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FATAL: u8 = 1;
pub const EXIT_EMPTY: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LanguageArg {
    C,
    Cpp,
    Java,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    File,
    Project,
    Multi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Jsonl,
}

/// Classify identifier naming conventions in C, C++ and Java source trees.
#[derive(Debug, Parser)]
#[command(name = "idstyle")]
struct Args {
    /// Source language; only files with this language's extensions are scanned
    #[arg(long, value_enum)]
    language: LanguageArg,
    /// file: one source file; project: one project tree; multi: each sub-directory is a project
    #[arg(long, value_enum, default_value = "project")]
    mode: ModeArg,
    /// File or directory to scan
    #[arg(long)]
    input: PathBuf,
    /// Write result rows here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Suppress per-identifier detail and informational notes
    #[arg(long)]
    quiet: bool,
    /// Print per-file progress to stderr
    #[arg(long)]
    debug: bool,
    /// Emit the per-identifier listing (name, convention, occurrences, lines) as JSON lines
    #[arg(long)]
    detailed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub language: Language,
    pub mode: ScanMode,
    pub input: PathBuf,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub quiet: bool,
    pub debug: bool,
    pub detailed: bool,
}

/// Usage error or a help request.
#[derive(Debug)]
pub struct UsageError(clap::Error);

impl UsageError {
    pub fn is_help(&self) -> bool {
        matches!(
            self.0.kind(),
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
        )
    }

    pub fn exit_code(&self) -> u8 {
        if self.is_help() {
            EXIT_OK
        } else {
            EXIT_FATAL
        }
    }

    /// Help goes to stdout; errors go to stderr followed by the full help text.
    pub fn print(&self) {
        if self.is_help() {
            let _ = self.0.print();
            return;
        }
        let mut err = io::stderr().lock();
        let _ = write!(err, "{}", self.0.render());
        let _ = writeln!(err);
        let _ = write!(err, "{}", <Args as clap::CommandFactory>::command().render_help());
    }
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0.render())
    }
}

/// `argv[0]` is the program name.
pub fn parse_args<I, T>(argv: I) -> Result<CliConfig, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(UsageError)?;
    Ok(CliConfig {
        language: match args.language {
            LanguageArg::C => Language::C,
            LanguageArg::Cpp => Language::Cpp,
            LanguageArg::Java => Language::Java,
        },
        mode: match args.mode {
            ModeArg::File => ScanMode::SingleFile,
            ModeArg::Project => ScanMode::SingleProject,
            ModeArg::Multi => ScanMode::MultiProject,
        },
        input: args.input,
        output: args.out,
        format: match args.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Jsonl => Format::Jsonl,
        },
        quiet: args.quiet,
        debug: args.debug,
        detailed: args.detailed,
    })
}

/// Runs against the process streams.
pub fn run(config: &CliConfig) -> u8 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(config, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs with explicit output streams and returns the exit status.
pub fn run_with(config: &CliConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    match execute(config, stdout, stderr) {
        Ok(status) => status,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            EXIT_FATAL
        }
    }
}

fn sibling(out: &Path, suffix: &str) -> PathBuf {
    out.with_extension(suffix)
}

fn create(path: &Path) -> Result<File, String> {
    File::create(path).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn execute(config: &CliConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<u8, String> {
    let profile = LanguageProfile::new(config.language);
    let scan: CorpusScan = scan_corpus(&config.input, &profile, config.mode).map_err(|e| e.to_string())?;

    let io_err = |e: io::Error| e.to_string();
    for diag in scan.diagnostics.iter().chain(scan.reports.iter().flat_map(|r| r.diagnostics.iter())) {
        writeln!(stderr, "{diag}").map_err(io_err)?;
    }
    if config.debug {
        for report in &scan.reports {
            for file in report.detail.iter().flat_map(|d| d.files.iter()) {
                writeln!(
                    stderr,
                    "debug: {}: {} ({} lines, {} identifiers)",
                    report.project,
                    file.path,
                    file.loc,
                    file.identifiers.len()
                )
                .map_err(io_err)?;
            }
        }
    }

    let rows: Vec<ReportRow> = scan.reports.iter().map(ReportRow::from).collect();
    match &config.output {
        Some(path) => write_rows(&rows, config.format, create(path)?).map_err(|e| e.to_string())?,
        None => write_rows(&rows, config.format, &mut *stdout).map_err(|e| e.to_string())?,
    }

    let summaries = if scan.reports.is_empty() {
        Vec::new()
    } else {
        vec![aggregate_language(&scan.reports).map_err(|e| e.to_string())?]
    };
    let human: &mut dyn Write = if config.output.is_some() { &mut *stdout } else { &mut *stderr };
    human.write_all(render_summary(&summaries).as_bytes()).map_err(io_err)?;

    if let (Some(out), Format::Jsonl) = (&config.output, config.format) {
        write_summary_jsonl(&summaries, create(&sibling(out, "summary.jsonl"))?).map_err(|e| e.to_string())?;
    }
    if config.detailed && !config.quiet {
        match &config.output {
            Some(out) => write_identifier_listing(&scan.reports, create(&sibling(out, "identifiers.jsonl"))?),
            None => write_identifier_listing(&scan.reports, &mut *human),
        }
        .map_err(|e| e.to_string())?;
    }

    let files = scan.total_files();
    if files == 0 {
        writeln!(
            stderr,
            "warning: no {} source files found under {}",
            config.language,
            config.input.display()
        )
        .map_err(io_err)?;
        return Ok(EXIT_EMPTY);
    }
    if !config.quiet {
        writeln!(stderr, "scanned {} project(s), {} file(s)", scan.reports.len(), files).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}
