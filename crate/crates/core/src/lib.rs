//! Identifier naming-convention census for C, C++ and Java source trees.
//!
//! The pipeline is: [`lexer`] extracts identifiers from each file, [`classifier`]
//! assigns each distinct name to a convention, [`corpus`] folds files into
//! per-project reports, [`stats`] computes ratios and dispersion, and [`report`]
//! serializes the results.

pub mod classifier;
pub mod cli;
pub mod corpus;
pub mod diagnostics;
pub mod lexer;
pub mod report;
pub mod stats;

pub use classifier::{classify, classify_all, Convention, RULESET_VERSION};
pub use corpus::{scan_corpus, scan_project, ProjectReport, ScanMode};
pub use diagnostics::Diagnostic;
pub use lexer::{extract_identifiers, Language, LanguageProfile};
pub use stats::{aggregate_language, ConventionCounts, CorpusSummary};
