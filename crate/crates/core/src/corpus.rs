//! File discovery and per-project aggregation.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::classifier::{classify, Convention};
use crate::diagnostics::Diagnostic;
use crate::lexer::{extract_identifiers, physical_lines, IdentifierRecord, Language, LanguageProfile};
use crate::stats::ConventionCounts;

/// LOC basis recorded with reports: every newline-delimited line, blanks and comments included.
pub const LOC_BASIS: &str = "physical";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScanMode {
    SingleFile,
    SingleProject,
    /// Each immediate sub-directory of the root is one project.
    MultiProject,
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("cannot read {}: {source}", path.display())]
    Unreadable { path: PathBuf, source: io::Error },
    #[error("{} is not a directory", .0.display())]
    NotADirectory(PathBuf),
    #[error("{} is not a file", .0.display())]
    NotAFile(PathBuf),
}

/// One scanned file: relative path, physical LOC and its identifier records.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileDetail {
    pub path: String,
    pub loc: u64,
    pub identifiers: BTreeMap<String, IdentifierRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentifierEntry {
    pub convention: Convention,
    pub occurrences: u64,
}

/// Per-file and per-identifier breakdown of a project scan.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectDetail {
    pub files: Vec<FileDetail>,
    pub identifiers: BTreeMap<String, IdentifierEntry>,
}

/// Summary row for one project.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectReport {
    pub project: String,
    pub version: Option<String>,
    pub language: Language,
    pub counts: ConventionCounts,
    pub total_loc: u64,
    pub total_files: u64,
    pub detail: Option<ProjectDetail>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ProjectReport {
    pub fn empty(project: impl Into<String>, version: Option<String>, language: Language) -> Self {
        ProjectReport {
            project: project.into(),
            version,
            language,
            counts: ConventionCounts::default(),
            total_loc: 0,
            total_files: 0,
            detail: Some(ProjectDetail::default()),
            diagnostics: Vec::new(),
        }
    }
}

/// Files of one language under `root`, depth first, entries of each
/// directory in byte order of their names. Symlinks are not followed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Discovery {
    pub files: Vec<PathBuf>,
    pub diagnostics: Vec<Diagnostic>,
}

pub fn discover_files(root: &Path, profile: &LanguageProfile) -> Result<Discovery, CorpusError> {
    let meta = fs::metadata(root).map_err(|source| CorpusError::Unreadable { path: root.to_path_buf(), source })?;
    if !meta.is_dir() {
        return Err(CorpusError::NotADirectory(root.to_path_buf()));
    }
    fs::read_dir(root).map_err(|source| CorpusError::Unreadable { path: root.to_path_buf(), source })?;

    let mut discovery = Discovery::default();
    for entry in WalkDir::new(root).follow_links(false).sort_by_file_name() {
        match entry {
            Ok(entry) => {
                if entry.file_type().is_file() && profile.accepts_path(entry.path()) {
                    discovery.files.push(entry.into_path());
                }
            }
            Err(err) => {
                let path = err.path().map(Path::to_path_buf).unwrap_or_else(|| root.to_path_buf());
                discovery
                    .diagnostics
                    .push(Diagnostic::new(format!("skipped: {err}")).with_path(path));
            }
        }
    }
    Ok(discovery)
}

struct FileScan {
    detail: FileDetail,
    diagnostics: Vec<Diagnostic>,
}

fn scan_file(path: &Path, display: String, profile: &LanguageProfile) -> Result<FileScan, Diagnostic> {
    let bytes = fs::read(path).map_err(|err| Diagnostic::new(format!("read failed: {err}")).with_path(path))?;
    let text = String::from_utf8_lossy(&bytes);
    let extraction = extract_identifiers(&text, profile);
    let diagnostics = extraction
        .diagnostics
        .into_iter()
        .map(|d| d.with_path(path))
        .collect();
    Ok(FileScan {
        detail: FileDetail {
            path: display,
            loc: physical_lines(&text) as u64,
            identifiers: extraction.identifiers,
        },
        diagnostics,
    })
}

fn relative_display(root: &Path, path: &Path) -> String {
    let rel = path.strip_prefix(root).unwrap_or(path);
    rel.components()
        .map(|c| c.as_os_str().to_string_lossy())
        .collect::<Vec<_>>()
        .join("/")
}

/// Folds per-file results into a report. Identifier distinctness is project-wide.
fn assemble(
    project: String,
    version: Option<String>,
    profile: &LanguageProfile,
    scans: Vec<Result<FileScan, Diagnostic>>,
    mut diagnostics: Vec<Diagnostic>,
) -> ProjectReport {
    let mut files = Vec::with_capacity(scans.len());
    let mut occurrences: BTreeMap<String, u64> = BTreeMap::new();
    for scan in scans {
        match scan {
            Ok(scan) => {
                for (name, record) in &scan.detail.identifiers {
                    *occurrences.entry(name.clone()).or_default() += record.occurrences;
                }
                diagnostics.extend(scan.diagnostics);
                files.push(scan.detail);
            }
            Err(diag) => diagnostics.push(diag),
        }
    }

    let mut counts = ConventionCounts::default();
    let identifiers: BTreeMap<String, IdentifierEntry> = occurrences
        .into_iter()
        .map(|(name, occurrences)| {
            let convention = classify(&name);
            counts.tally(convention);
            (name, IdentifierEntry { convention, occurrences })
        })
        .collect();

    ProjectReport {
        project,
        version,
        language: profile.language(),
        counts,
        total_loc: files.iter().map(|f| f.loc).sum(),
        total_files: files.len() as u64,
        detail: Some(ProjectDetail { files, identifiers }),
        diagnostics,
    }
}

/// Scans every matching file under `root` as one project.
pub fn scan_project(
    root: &Path,
    profile: &LanguageProfile,
    name: &str,
    version: Option<String>,
) -> Result<ProjectReport, CorpusError> {
    let discovery = discover_files(root, profile)?;
    let scans: Vec<Result<FileScan, Diagnostic>> = discovery
        .files
        .par_iter()
        .map(|path| scan_file(path, relative_display(root, path), profile))
        .collect();
    Ok(assemble(name.to_string(), version, profile, scans, discovery.diagnostics))
}

/// Scans a single file as a one-file project. A file with a foreign
/// extension yields an empty report and a warning.
pub fn scan_single_file(
    path: &Path,
    profile: &LanguageProfile,
    name: &str,
    version: Option<String>,
) -> Result<ProjectReport, CorpusError> {
    let meta = fs::metadata(path).map_err(|source| CorpusError::Unreadable { path: path.to_path_buf(), source })?;
    if !meta.is_file() {
        return Err(CorpusError::NotAFile(path.to_path_buf()));
    }
    if !profile.accepts_path(path) {
        let mut report = ProjectReport::empty(name, version, profile.language());
        report.diagnostics.push(
            Diagnostic::new(format!("extension not handled for {}", profile.language())).with_path(path),
        );
        return Ok(report);
    }
    let display = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let scan = scan_file(path, display, profile);
    Ok(assemble(name.to_string(), version, profile, vec![scan], Vec::new()))
}

#[derive(Debug, Clone, Default)]
pub struct CorpusScan {
    pub reports: Vec<ProjectReport>,
    pub diagnostics: Vec<Diagnostic>,
}

impl CorpusScan {
    pub fn total_files(&self) -> u64 {
        self.reports.iter().map(|r| r.total_files).sum()
    }
}

/// Last path component, falling back to the canonical path's, then the raw path.
fn project_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .or_else(|| {
            fs::canonicalize(path)
                .ok()
                .and_then(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()))
        })
        .unwrap_or_else(|| path.display().to_string())
}

/// Runs a scan in the given mode.
pub fn scan_corpus(root: &Path, profile: &LanguageProfile, mode: ScanMode) -> Result<CorpusScan, CorpusError> {
    match mode {
        ScanMode::SingleFile => {
            let report = scan_single_file(root, profile, &project_name(root), None)?;
            Ok(CorpusScan { reports: vec![report], diagnostics: Vec::new() })
        }
        ScanMode::SingleProject => {
            let report = scan_project(root, profile, &project_name(root), None)?;
            Ok(CorpusScan { reports: vec![report], diagnostics: Vec::new() })
        }
        ScanMode::MultiProject => {
            let meta =
                fs::metadata(root).map_err(|source| CorpusError::Unreadable { path: root.to_path_buf(), source })?;
            if !meta.is_dir() {
                return Err(CorpusError::NotADirectory(root.to_path_buf()));
            }
            let entries =
                fs::read_dir(root).map_err(|source| CorpusError::Unreadable { path: root.to_path_buf(), source })?;
            let mut scan = CorpusScan::default();
            let mut projects = Vec::new();
            for entry in entries {
                match entry {
                    Ok(entry) if entry.file_type().map(|t| t.is_dir()).unwrap_or(false) => {
                        projects.push(entry.file_name())
                    }
                    Ok(_) => {}
                    Err(err) => scan
                        .diagnostics
                        .push(Diagnostic::new(format!("skipped entry: {err}")).with_path(root)),
                }
            }
            projects.sort();
            if projects.is_empty() {
                scan.diagnostics
                    .push(Diagnostic::new("no project sub-directories found").with_path(root));
            }
            for name in projects {
                let dir = root.join(&name);
                match scan_project(&dir, profile, &name.to_string_lossy(), None) {
                    Ok(report) => scan.reports.push(report),
                    Err(err) => scan.diagnostics.push(Diagnostic::new(err.to_string()).with_path(dir)),
                }
            }
            Ok(scan)
        }
    }
}
