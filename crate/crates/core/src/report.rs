//! Flat result rows (CSV / JSON lines) and plain-text summary tables.

use std::fmt::Write as _;
use std::io::{self, BufRead, Read, Write};

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::classifier::{classify, Convention, RULESET_VERSION};
use crate::corpus::{ProjectReport, LOC_BASIS};
use crate::lexer::Language;
use crate::stats::{ConventionCounts, CorpusSummary, STD_DEV_BASIS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("output error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Column order of [`ReportRow`].
pub const ROW_FIELDS: [&str; 11] = [
    "project",
    "version",
    "language",
    "pascal",
    "camel",
    "hungarian",
    "underline",
    "capital",
    "total_ids",
    "total_loc",
    "total_files",
];

/// One result row per project.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub project: String,
    pub version: Option<String>,
    pub language: Language,
    pub pascal: u64,
    pub camel: u64,
    pub hungarian: u64,
    pub underline: u64,
    pub capital: u64,
    pub total_ids: u64,
    pub total_loc: u64,
    pub total_files: u64,
}

impl ReportRow {
    pub fn counts(&self) -> ConventionCounts {
        ConventionCounts {
            pascal: self.pascal,
            camel: self.camel,
            hungarian: self.hungarian,
            underline: self.underline,
            capital: self.capital,
            total_ids: self.total_ids,
        }
    }

    /// A detail-less report carrying this row's numbers.
    pub fn to_report(&self) -> ProjectReport {
        ProjectReport {
            project: self.project.clone(),
            version: self.version.clone(),
            language: self.language,
            counts: self.counts(),
            total_loc: self.total_loc,
            total_files: self.total_files,
            detail: None,
            diagnostics: Vec::new(),
        }
    }
}

impl From<&ProjectReport> for ReportRow {
    fn from(report: &ProjectReport) -> Self {
        let c = report.counts;
        ReportRow {
            project: report.project.clone(),
            version: report.version.clone(),
            language: report.language,
            pascal: c.pascal,
            camel: c.camel,
            hungarian: c.hungarian,
            underline: c.underline,
            capital: c.capital,
            total_ids: c.total_ids,
            total_loc: report.total_loc,
            total_files: report.total_files,
        }
    }
}

pub fn write_rows<W: Write>(rows: &[ReportRow], format: Format, sink: W) -> Result<(), ReportError> {
    match format {
        Format::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .has_headers(false)
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(sink);
            writer.write_record(ROW_FIELDS)?;
            for row in rows {
                writer.serialize(row)?;
            }
            writer.flush()?;
        }
        Format::Jsonl => {
            let mut sink = io::BufWriter::new(sink);
            for row in rows {
                serde_json::to_writer(&mut sink, row)?;
                sink.write_all(b"\n")?;
            }
            sink.flush()?;
        }
    }
    Ok(())
}

pub fn read_rows<R: Read>(source: R, format: Format) -> Result<Vec<ReportRow>, ReportError> {
    match format {
        Format::Csv => {
            let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(source);
            reader.deserialize().map(|row| row.map_err(ReportError::from)).collect()
        }
        Format::Jsonl => {
            let mut rows = Vec::new();
            for line in io::BufReader::new(source).lines() {
                let line = line?;
                if !line.trim().is_empty() {
                    rows.push(serde_json::from_str(&line)?);
                }
            }
            Ok(rows)
        }
    }
}

/// Per-identifier listing as JSON lines: one object per identifier per file.
pub fn write_identifier_listing<W: Write>(reports: &[ProjectReport], sink: W) -> Result<(), ReportError> {
    let mut sink = io::BufWriter::new(sink);
    for report in reports {
        let Some(detail) = &report.detail else { continue };
        for file in &detail.files {
            for (name, record) in &file.identifiers {
                let convention = detail
                    .identifiers
                    .get(name)
                    .map(|e| e.convention)
                    .unwrap_or_else(|| classify(name));
                let value = json!({
                    "project": report.project,
                    "file": file.path,
                    "name": name,
                    "convention": convention,
                    "occurrences": record.occurrences,
                    "lines": record.lines,
                });
                serde_json::to_writer(&mut sink, &value)?;
                sink.write_all(b"\n")?;
            }
        }
    }
    sink.flush()?;
    Ok(())
}

/// Language summaries as JSON lines with full-precision ratios and CVs.
pub fn write_summary_jsonl<W: Write>(summaries: &[CorpusSummary], sink: W) -> Result<(), ReportError> {
    let mut sink = io::BufWriter::new(sink);
    for s in summaries {
        let distribution = s.distribution.map(|d| {
            let mut map = serde_json::Map::new();
            for conv in Convention::MATCHED {
                let ratio = d.get(conv).expect("matched convention");
                map.insert(conv.label().to_ascii_lowercase(), json!(ratio.value()));
            }
            map
        });
        let value = json!({
            "language": s.language,
            "ruleset": RULESET_VERSION,
            "std_dev_basis": STD_DEV_BASIS,
            "loc_basis": LOC_BASIS,
            "projects": s.projects,
            "counts": s.counts,
            "matched": s.counts.matched(),
            "total_loc": s.total_loc,
            "total_files": s.total_files,
            "match_ratio": s.match_ratio.map(|r| r.value()),
            "distribution": distribution,
            "popularity": s.popularity,
            "project_cvs": s.project_cvs,
            "average_cv": s.average_cv,
        });
        serde_json::to_writer(&mut sink, &value)?;
        sink.write_all(b"\n")?;
    }
    sink.flush()?;
    Ok(())
}

/// Left-aligns the first column and right-aligns the rest.
fn render_table(title: &str, header: &[String], rows: &[Vec<String>]) -> String {
    let columns = header.len();
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(columns) {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        let mut out = String::new();
        for (i, width) in widths.iter().enumerate() {
            let cell = cells.get(i).map(String::as_str).unwrap_or("");
            if i > 0 {
                out.push_str("  ");
            }
            if i == 0 {
                let _ = write!(out, "{cell:<width$}");
            } else {
                let _ = write!(out, "{cell:>width$}");
            }
        }
        out.trim_end().to_string()
    };
    let total_width = widths.iter().sum::<usize>() + 2 * columns.saturating_sub(1);
    let mut out = String::new();
    out.push_str(title);
    out.push('\n');
    out.push_str(&line(header));
    out.push('\n');
    out.push_str(&"-".repeat(total_width));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

fn percent_or_na(ratio: Option<crate::stats::Ratio>) -> String {
    ratio.map(|r| r.percent()).unwrap_or_else(|| "n/a".to_string())
}

/// Totals, distribution, popularity order and per-project CV, one column
/// (or row group) per language.
pub fn render_summary(summaries: &[CorpusSummary]) -> String {
    if summaries.is_empty() {
        return "no data\n".to_string();
    }
    let mut out = String::new();

    // totals and match ratio
    let mut header = vec!["Language".to_string()];
    header.extend(summaries.iter().map(|s| s.language.to_string()));
    let table_order = [
        Convention::Pascal,
        Convention::Camel,
        Convention::Hungarian,
        Convention::Underline,
        Convention::Capital,
    ];
    let mut rows: Vec<Vec<String>> = table_order
        .iter()
        .map(|&conv| {
            let mut row = vec![conv.to_string()];
            row.extend(summaries.iter().map(|s| s.counts.get(conv).to_string()));
            row
        })
        .collect();
    let mut matched = vec!["matched".to_string()];
    matched.extend(summaries.iter().map(|s| s.counts.matched().to_string()));
    let mut total = vec!["total".to_string()];
    total.extend(summaries.iter().map(|s| s.counts.total_ids.to_string()));
    let mut ratio = vec!["match ratio".to_string()];
    ratio.extend(summaries.iter().map(|s| percent_or_na(s.match_ratio)));
    rows.extend([matched, total, ratio]);
    out.push_str(&render_table("Matched identifiers and match ratio", &header, &rows));
    out.push('\n');

    // distribution
    let mut header = vec!["Language".to_string()];
    header.extend(table_order.iter().map(|c| c.to_string()));
    let rows: Vec<Vec<String>> = summaries
        .iter()
        .map(|s| {
            let mut row = vec![s.language.to_string()];
            row.extend(table_order.iter().map(|&c| percent_or_na(s.distribution.and_then(|d| d.get(c)))));
            row
        })
        .collect();
    out.push_str(&render_table("Distribution of naming conventions", &header, &rows));
    out.push('\n');

    // popularity
    let header: Vec<String> = ["Language", "1st", "2nd", "3rd", "4th", "5th"].iter().map(|s| s.to_string()).collect();
    let mut any_tie = false;
    let rows: Vec<Vec<String>> = summaries
        .iter()
        .map(|s| {
            let mut row = vec![s.language.to_string()];
            row.extend(s.popularity.iter().map(|r| {
                any_tie |= r.tied;
                if r.tied {
                    format!("{}*", r.convention)
                } else {
                    r.convention.to_string()
                }
            }));
            row
        })
        .collect();
    out.push_str(&render_table("Popularity order", &header, &rows));
    if any_tie {
        out.push_str("* tied count\n");
    }
    out.push('\n');

    // coefficient of variation
    let mut header = vec!["No.".to_string()];
    for s in summaries {
        header.push(format!("{} Project", s.language));
        header.push(format!("{} CV", s.language));
    }
    let longest = summaries.iter().map(|s| s.project_cvs.len()).max().unwrap_or(0);
    let mut rows: Vec<Vec<String>> = (0..longest)
        .map(|i| {
            let mut row = vec![(i + 1).to_string()];
            for s in summaries {
                match s.project_cvs.get(i) {
                    Some(p) => {
                        row.push(p.project.clone());
                        row.push(p.cv.map(|c| format!("{:.2}", c.cv)).unwrap_or_else(|| "-".to_string()));
                    }
                    None => row.extend([String::new(), String::new()]),
                }
            }
            row
        })
        .collect();
    let mut average = vec!["Average".to_string()];
    for s in summaries {
        average.push(String::new());
        average.push(s.average_cv.map(|v| format!("{v:.2}")).unwrap_or_else(|| "-".to_string()));
    }
    rows.push(average);
    out.push_str(&render_table("Coefficient of variation per project", &header, &rows));
    out
}
