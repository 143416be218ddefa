//! Identifier extraction for C, C++ and Java sources.
//!
//! Extraction runs in two passes: [`strip_noise`] blanks comments and literal
//! contents while keeping the line layout, then [`tokenize`] picks out every
//! identifier-shaped run that is not a keyword or part of a numeric constant.

mod profile;
mod strip;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::diagnostics::Diagnostic;

pub use profile::{Language, LanguageProfile, UnknownLanguage};
pub use strip::{strip_noise, Stripped};

/// One identifier occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub line: usize,
}

/// All occurrences of one identifier spelling within a file (or project).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentifierRecord {
    pub name: String,
    pub occurrences: u64,
    pub lines: Vec<usize>,
}

impl IdentifierRecord {
    pub fn new(name: impl Into<String>) -> Self {
        IdentifierRecord { name: name.into(), occurrences: 0, lines: Vec::new() }
    }

    pub fn record(&mut self, line: usize) {
        self.occurrences += 1;
        self.lines.push(line);
    }
}

/// Result of [`extract_identifiers`] for one source text.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Extraction {
    pub identifiers: BTreeMap<String, IdentifierRecord>,
    pub diagnostics: Vec<Diagnostic>,
}

impl Extraction {
    pub fn token_count(&self) -> u64 {
        self.identifiers.values().map(|r| r.occurrences).sum()
    }
}

/// Physical line count: newline-terminated lines plus a final unterminated one.
pub fn physical_lines(text: &str) -> usize {
    text.lines().count()
}

/// Emits identifier tokens from stripped text in document order.
///
/// Keywords are dropped, as are alphanumeric runs that start with a digit
/// (`0xFF`, `1e5f`, `10L`). On preprocessor profiles the directive name after a
/// line-leading `#` is dropped, and so is `defined` on directive lines.
/// Non-ASCII characters act as separators.
pub fn tokenize(clean_text: &str, profile: &LanguageProfile) -> Vec<Token> {
    let bytes = clean_text.as_bytes();
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut line_start = true;
    let mut expect_directive = false;
    let mut directive_line = false;
    let mut i = 0;

    while i < bytes.len() {
        let b = bytes[i];
        if is_ident_start(b) {
            let start = i;
            while i < bytes.len() && is_ident_continue(bytes[i]) {
                i += 1;
            }
            let text = &clean_text[start..i];
            line_start = false;
            if expect_directive {
                expect_directive = false;
                continue;
            }
            if directive_line && text == "defined" {
                continue;
            }
            if !profile.is_keyword(text) {
                tokens.push(Token { text: text.to_string(), line });
            }
            continue;
        }
        if b.is_ascii_digit() {
            while i < bytes.len() && is_ident_continue(bytes[i]) {
                i += 1;
            }
            line_start = false;
            expect_directive = false;
            continue;
        }
        match b {
            b'\n' => {
                line += 1;
                line_start = true;
                expect_directive = false;
                directive_line = false;
            }
            b'#' if line_start && profile.has_preprocessor() => {
                expect_directive = true;
                directive_line = true;
                line_start = false;
            }
            b' ' | b'\t' | b'\r' | b'\x0b' | b'\x0c' => {}
            _ => {
                line_start = false;
                expect_directive = false;
            }
        }
        i += 1;
    }
    tokens
}

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_'
}

fn is_ident_continue(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

/// Strips, tokenizes and folds tokens into per-name records.
pub fn extract_identifiers(source: &str, profile: &LanguageProfile) -> Extraction {
    let stripped = strip_noise(source, profile);
    let mut identifiers: BTreeMap<String, IdentifierRecord> = BTreeMap::new();
    for token in tokenize(&stripped.text, profile) {
        identifiers
            .entry(token.text)
            .or_insert_with_key(|name| IdentifierRecord::new(name.clone()))
            .record(token.line);
    }
    Extraction { identifiers, diagnostics: stripped.diagnostics }
}
