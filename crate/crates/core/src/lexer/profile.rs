use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Source language selected for a scan. One language per invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Language {
    C,
    #[serde(rename = "C++")]
    Cpp,
    Java,
}

impl Language {
    pub const ALL: [Language; 3] = [Language::C, Language::Cpp, Language::Java];

    pub fn label(self) -> &'static str {
        match self {
            Language::C => "C",
            Language::Cpp => "C++",
            Language::Java => "Java",
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown language `{0}` (expected one of: c, cpp, java)")]
pub struct UnknownLanguage(pub String);

impl FromStr for Language {
    type Err = UnknownLanguage;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "c" => Ok(Language::C),
            "cpp" | "c++" | "cxx" => Ok(Language::Cpp),
            "java" => Ok(Language::Java),
            _ => Err(UnknownLanguage(s.to_string())),
        }
    }
}

const C_KEYWORDS: &str = include_str!("../../data/keywords.c.txt");
const CPP_KEYWORDS: &str = include_str!("../../data/keywords.cpp.txt");
const JAVA_KEYWORDS: &str = include_str!("../../data/keywords.java.txt");

/// Per-language lexical settings: accepted file suffixes, reserved words and
/// whether `#` directives are recognised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageProfile {
    language: Language,
    extensions: BTreeSet<&'static str>,
    keywords: BTreeSet<&'static str>,
    has_preprocessor: bool,
}

impl LanguageProfile {
    pub fn new(language: Language) -> Self {
        let (extensions, table): (&[&'static str], &'static str) = match language {
            Language::C => (&["c", "h"], C_KEYWORDS),
            Language::Cpp => (&["c", "h", "cpp", "hpp"], CPP_KEYWORDS),
            Language::Java => (&["java"], JAVA_KEYWORDS),
        };
        LanguageProfile {
            language,
            extensions: extensions.iter().copied().collect(),
            keywords: parse_keyword_table(table),
            has_preprocessor: matches!(language, Language::C | Language::Cpp),
        }
    }

    pub fn language(&self) -> Language {
        self.language
    }

    /// Lowercase suffixes without the leading dot.
    pub fn extensions(&self) -> &BTreeSet<&'static str> {
        &self.extensions
    }

    pub fn keywords(&self) -> &BTreeSet<&'static str> {
        &self.keywords
    }

    pub fn has_preprocessor(&self) -> bool {
        self.has_preprocessor
    }

    pub fn is_keyword(&self, word: &str) -> bool {
        self.keywords.contains(word)
    }

    /// True when the file name's lowercased extension belongs to this language.
    pub fn accepts_path(&self, path: &std::path::Path) -> bool {
        path.extension()
            .and_then(|ext| ext.to_str())
            .map(|ext| self.extensions.contains(ext.to_ascii_lowercase().as_str()))
            .unwrap_or(false)
    }
}

impl From<Language> for LanguageProfile {
    fn from(language: Language) -> Self {
        LanguageProfile::new(language)
    }
}

fn parse_keyword_table(table: &'static str) -> BTreeSet<&'static str> {
    table
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::Path;

    #[test]
    fn extensions_per_language() {
        let c = LanguageProfile::new(Language::C);
        let cpp = LanguageProfile::new(Language::Cpp);
        let java = LanguageProfile::new(Language::Java);
        assert_eq!(c.extensions().iter().copied().collect::<Vec<_>>(), ["c", "h"]);
        assert_eq!(
            cpp.extensions().iter().copied().collect::<Vec<_>>(),
            ["c", "cpp", "h", "hpp"]
        );
        assert_eq!(java.extensions().iter().copied().collect::<Vec<_>>(), ["java"]);
    }

    #[test]
    fn preprocessor_flag() {
        assert!(LanguageProfile::new(Language::C).has_preprocessor());
        assert!(LanguageProfile::new(Language::Cpp).has_preprocessor());
        assert!(!LanguageProfile::new(Language::Java).has_preprocessor());
    }

    #[test]
    fn keyword_tables_are_lowercase_initial_except_c99_underscore_types() {
        for lang in Language::ALL {
            let profile = LanguageProfile::new(lang);
            assert!(!profile.keywords().is_empty());
            for kw in profile.keywords() {
                let first = kw.as_bytes()[0];
                assert!(
                    first.is_ascii_lowercase() || kw.starts_with("_B") || kw.starts_with("_C") || kw.starts_with("_I"),
                    "{lang}: {kw}"
                );
            }
        }
        let c = LanguageProfile::new(Language::C);
        assert!(c.is_keyword("restrict") && c.is_keyword("_Bool"));
        assert!(!c.is_keyword("class"));
        let java = LanguageProfile::new(Language::Java);
        assert!(java.is_keyword("null") && java.is_keyword("true") && java.is_keyword("false"));
        assert!(LanguageProfile::new(Language::Cpp).is_keyword("wchar_t"));
    }

    #[test]
    fn accepts_path_is_case_insensitive() {
        let c = LanguageProfile::new(Language::C);
        assert!(c.accepts_path(Path::new("src/MAIN.C")));
        assert!(c.accepts_path(Path::new("x.h")));
        assert!(!c.accepts_path(Path::new("x.cpp")));
        assert!(!c.accepts_path(Path::new("Makefile")));
    }

    #[test]
    fn language_parsing() {
        assert_eq!("java".parse::<Language>().unwrap(), Language::Java);
        assert_eq!("CPP".parse::<Language>().unwrap(), Language::Cpp);
        assert!("cobol".parse::<Language>().is_err());
        assert_eq!(Language::Cpp.to_string(), "C++");
    }
}
