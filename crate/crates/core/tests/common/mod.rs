#![allow(dead_code)]

use std::path::PathBuf;

use idstyle::report::{read_rows, Format, ReportRow};
use idstyle::Language;
use proptest::prelude::*;

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

/// Per-project rows of the published 48-project corpus.
pub fn published_rows() -> Vec<ReportRow> {
    let file = std::fs::File::open(fixtures_dir().join("published_projects.csv")).unwrap();
    read_rows(file, Format::Csv).unwrap()
}

pub fn published_rows_for(language: Language) -> Vec<ReportRow> {
    published_rows().into_iter().filter(|r| r.language == language).collect()
}

pub fn identifier() -> impl Strategy<Value = String> {
    "[A-Za-z_][A-Za-z0-9_]{0,10}"
}

/// Keywords from all three languages mixed into generated code.
const KEYWORDS: &[&str] = &[
    "int", "for", "return", "class", "public", "static", "void", "null", "true", "template", "typedef",
    "struct", "namespace", "boolean", "sizeof",
];

fn word() -> impl Strategy<Value = String> {
    prop_oneof![
        4 => identifier(),
        2 => proptest::sample::select(KEYWORDS).prop_map(str::to_string),
        1 => "[ a-zA-Z0-9_]{0,12}",
    ]
}

fn words() -> impl Strategy<Value = String> {
    proptest::collection::vec(word(), 0..4).prop_map(|w| w.join(" "))
}

/// A self-contained lexical fragment that starts and ends outside any
/// comment or literal.
#[derive(Debug, Clone)]
pub enum Part {
    Code(String),
    Str(String),
    Block(String),
    Line(String),
}

impl Part {
    pub fn render(&self) -> String {
        match self {
            Part::Code(text) => text.clone(),
            Part::Str(body) => format!("\"{body}\""),
            Part::Block(body) => format!("/*{body}*/"),
            Part::Line(body) => format!("//{body}\n"),
        }
    }

    pub fn is_opaque(&self) -> bool {
        !matches!(self, Part::Code(_))
    }

    /// Same fragment with `text` inserted right after the opening delimiter.
    pub fn with_inserted(&self, text: &str) -> Part {
        match self {
            Part::Code(c) => Part::Code(c.clone()),
            Part::Str(body) => Part::Str(format!("{text} {body}")),
            Part::Block(body) => Part::Block(format!("{text} {body}")),
            Part::Line(body) => Part::Line(format!("{text} {body}")),
        }
    }
}

fn string_body() -> impl Strategy<Value = String> {
    proptest::collection::vec(
        prop_oneof![
            3 => word(),
            1 => Just("\\\"".to_string()),
            1 => Just("\\\\".to_string()),
            1 => Just("/* // */".to_string()),
            1 => Just("'".to_string()),
        ],
        0..4,
    )
    .prop_map(|p| p.join(" "))
}

fn block_body() -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![3 => word(), 1 => Just("\n".to_string()), 1 => Just("\"'//".to_string())], 0..5)
        .prop_map(|p| p.join(" "))
}

fn code() -> impl Strategy<Value = String> {
    prop_oneof![
        6 => word(),
        2 => proptest::sample::select(&["0xFF", "1e5f", "42", "3.14", "10UL", "1_000L", "0b101"][..]).prop_map(str::to_string),
        3 => proptest::sample::select(&[";", "(", ")", "{", "}", "+", "=", "<", ">", ",", "::", "->", "[", "]"][..])
            .prop_map(str::to_string),
        2 => proptest::sample::select(&["\n", "\r\n", "\t", "  "][..]).prop_map(str::to_string),
        1 => proptest::sample::select(&["'a'", "'\\''", "'\"'"][..]).prop_map(str::to_string),
        1 => (identifier(), 0u8..3).prop_map(|(name, n)| format!("\n#define {name} {n}\n")),
        1 => Just("\n#include <sys/types.h>\n".to_string()),
        1 => Just("\n# if defined(FOO) && BAR\n".to_string()),
        1 => Just("caf\u{e9}".to_string()),
    ]
}

pub fn part() -> impl Strategy<Value = Part> {
    prop_oneof![
        6 => code().prop_map(Part::Code),
        1 => string_body().prop_map(Part::Str),
        1 => block_body().prop_map(Part::Block),
        1 => words().prop_map(Part::Line),
    ]
}

/// Well-formed fragment sequences, joined with single spaces.
pub fn parts() -> impl Strategy<Value = Vec<Part>> {
    proptest::collection::vec(part(), 0..40)
}

pub fn render(parts: &[Part]) -> String {
    parts.iter().map(Part::render).collect::<Vec<_>>().join(" ")
}

/// Arbitrary source-like text, including stray quotes, lone comment openers
/// and unterminated constructs.
pub fn noisy_source() -> impl Strategy<Value = String> {
    let raw = proptest::sample::select(&["\"", "'", "/", "*", "\\", "#", "/*", "//", "\n", "\u{fffd}", "\u{1F600}"][..])
        .prop_map(str::to_string);
    proptest::collection::vec(
        prop_oneof![6 => part().prop_map(|p| p.render()), 2 => raw, 1 => "[ -~]{0,6}"],
        0..50,
    )
    .prop_map(|chunks| chunks.concat())
}

pub fn language() -> impl Strategy<Value = Language> {
    proptest::sample::select(&Language::ALL[..])
}

pub mod lexer_invariants {
    use idstyle::lexer::{extract_identifiers, physical_lines, strip_noise, tokenize, LanguageProfile};

    use super::Part;

    pub fn line_preservation(text: &str, profile: &LanguageProfile) -> Result<(), String> {
        let stripped = strip_noise(text, profile).text;
        let (before, after) = (physical_lines(text), physical_lines(&stripped));
        if before != after {
            return Err(format!("{before} lines became {after}"));
        }
        if text.matches('\n').count() != stripped.matches('\n').count() {
            return Err("newline count changed".into());
        }
        Ok(())
    }

    pub fn no_keyword_leakage(text: &str, profile: &LanguageProfile) -> Result<(), String> {
        let stripped = strip_noise(text, profile).text;
        match tokenize(&stripped, profile).into_iter().find(|t| profile.is_keyword(&t.text)) {
            Some(t) => Err(format!("keyword `{}` emitted at line {}", t.text, t.line)),
            None => Ok(()),
        }
    }

    pub fn idempotence(text: &str, profile: &LanguageProfile) -> Result<(), String> {
        let once = strip_noise(text, profile).text;
        let twice = strip_noise(&once, profile).text;
        if once != twice {
            return Err(format!("{once:?} != {twice:?}"));
        }
        Ok(())
    }

    pub fn occurrence_conservation(text: &str, profile: &LanguageProfile) -> Result<(), String> {
        let tokens = tokenize(&strip_noise(text, profile).text, profile).len() as u64;
        let extraction = extract_identifiers(text, profile);
        let summed = extraction.token_count();
        if summed != tokens {
            return Err(format!("records hold {summed} occurrences, tokenizer emitted {tokens}"));
        }
        for record in extraction.identifiers.values() {
            if record.occurrences != record.lines.len() as u64 {
                return Err(format!("{}: occurrences != lines.len()", record.name));
            }
            if record.lines.windows(2).any(|w| w[0] > w[1]) {
                return Err(format!("{}: lines not sorted", record.name));
            }
        }
        Ok(())
    }

    /// Inserting `name` into the `index`-th opaque fragment must not change extraction.
    pub fn literal_opacity(parts: &[Part], index: usize, name: &str, profile: &LanguageProfile) -> Result<(), String> {
        let opaque: Vec<usize> = parts.iter().enumerate().filter(|(_, p)| p.is_opaque()).map(|(i, _)| i).collect();
        if opaque.is_empty() {
            return Ok(());
        }
        let target = opaque[index % opaque.len()];
        let mut modified = parts.to_vec();
        modified[target] = parts[target].with_inserted(name);
        let before = extract_identifiers(&super::render(parts), profile);
        let after = extract_identifiers(&super::render(&modified), profile);
        if before.identifiers != after.identifiers {
            return Err(format!("inserting `{name}` into {:?} changed the result", parts[target]));
        }
        Ok(())
    }
}
