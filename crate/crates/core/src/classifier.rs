//! Naming-convention classification.
//!
//! Each convention is a full-string grammar over ASCII identifiers:
//!
//! | convention | grammar                                                  |
//! |------------|----------------------------------------------------------|
//! | Capital    | `[A-Z][A-Z0-9]*(_[A-Z0-9]+)*`, at least two characters   |
//! | Hungarian  | `(g_\|m_\|s_\|c_)?<type prefix>([A-Z][a-z]+)+[0-9]*`     |
//! | Underline  | `[a-z][a-z0-9]*(_[a-z0-9]+)+`                            |
//! | Pascal     | `([A-Z][a-z]+)+[0-9]*`                                   |
//! | Camel      | `[a-z][a-z0-9]*([A-Z][a-z0-9]*)+[0-9]*` or `[a-z]{2,}[0-9]*` |
//!
//! Grammars are tried in the order above and the first full match wins, so
//! `lpQueueHead` (also a valid Camel name) is Hungarian. Names matching none
//! of them, including any name with a leading underscore, are `Unmatched`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

/// Revision of the rule set, recorded alongside generated reports.
pub const RULESET_VERSION: &str = "naming-rules/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Convention {
    Camel,
    Pascal,
    Hungarian,
    Underline,
    Capital,
    Unmatched,
}

impl Convention {
    /// The five recognised conventions, in tie-break order.
    pub const MATCHED: [Convention; 5] = [
        Convention::Camel,
        Convention::Pascal,
        Convention::Hungarian,
        Convention::Underline,
        Convention::Capital,
    ];

    pub const ALL: [Convention; 6] = [
        Convention::Camel,
        Convention::Pascal,
        Convention::Hungarian,
        Convention::Underline,
        Convention::Capital,
        Convention::Unmatched,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Convention::Camel => "Camel",
            Convention::Pascal => "Pascal",
            Convention::Hungarian => "Hungarian",
            Convention::Underline => "Underline",
            Convention::Capital => "Capital",
            Convention::Unmatched => "Unmatched",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Hungarian prefixes. Scope prefixes carry their underscore.
pub struct HungarianPrefixTable;

impl HungarianPrefixTable {
    pub const SCOPE: [&'static str; 4] = ["g_", "m_", "s_", "c_"];

    /// Sorted longest first so `lp` is tried before `l` and `sz` before `s`.
    pub const TYPE: [&'static str; 20] = [
        "by", "cb", "cr", "cx", "cy", "dw", "fn", "lp", "np", "sz", "a", "b", "c", "h", "i", "l",
        "n", "p", "s", "w",
    ];
}

/// Classifies one identifier. Total and deterministic.
pub fn classify(name: &str) -> Convention {
    let bytes = name.as_bytes();
    if is_capital(bytes) {
        Convention::Capital
    } else if is_hungarian(bytes) {
        Convention::Hungarian
    } else if is_underline(bytes) {
        Convention::Underline
    } else if is_pascal(bytes) {
        Convention::Pascal
    } else if is_camel(bytes) {
        Convention::Camel
    } else {
        Convention::Unmatched
    }
}

/// Partitions names into the six buckets. Every bucket is present, possibly empty.
pub fn classify_all<'a, I>(names: I) -> BTreeMap<Convention, BTreeSet<String>>
where
    I: IntoIterator<Item = &'a String>,
{
    let mut buckets: BTreeMap<Convention, BTreeSet<String>> =
        Convention::ALL.iter().map(|c| (*c, BTreeSet::new())).collect();
    for name in names {
        buckets.entry(classify(name)).or_default().insert(name.clone());
    }
    buckets
}

fn is_capital(s: &[u8]) -> bool {
    s.len() >= 2
        && s[0].is_ascii_uppercase()
        && s.split(|&b| b == b'_')
            .all(|word| !word.is_empty() && word.iter().all(|b| b.is_ascii_uppercase() || b.is_ascii_digit()))
}

fn is_underline(s: &[u8]) -> bool {
    let mut words = s.split(|&b| b == b'_');
    let first = words.next().unwrap_or_default();
    if first.first().is_none_or(|b| !b.is_ascii_lowercase()) || !is_lower_word(first) {
        return false;
    }
    let mut rest = 0;
    for word in words {
        if word.is_empty() || !is_lower_word(word) {
            return false;
        }
        rest += 1;
    }
    rest > 0
}

fn is_lower_word(word: &[u8]) -> bool {
    word.iter().all(|b| b.is_ascii_lowercase() || b.is_ascii_digit())
}

/// `([A-Z][a-z]+)+[0-9]*`
fn is_capitalized_words(s: &[u8]) -> bool {
    let body_len = s.len() - s.iter().rev().take_while(|b| b.is_ascii_digit()).count();
    let body = &s[..body_len];
    if body.is_empty() {
        return false;
    }
    let mut i = 0;
    while i < body.len() {
        if !body[i].is_ascii_uppercase() {
            return false;
        }
        i += 1;
        let tail_start = i;
        while i < body.len() && body[i].is_ascii_lowercase() {
            i += 1;
        }
        if i == tail_start {
            return false;
        }
    }
    true
}

fn is_pascal(s: &[u8]) -> bool {
    is_capitalized_words(s)
}

fn is_hungarian(s: &[u8]) -> bool {
    let unscoped = HungarianPrefixTable::SCOPE
        .iter()
        .find(|scope| s.starts_with(scope.as_bytes()))
        .map_or(s, |scope| &s[scope.len()..]);
    HungarianPrefixTable::TYPE.iter().any(|prefix| {
        unscoped.starts_with(prefix.as_bytes()) && is_capitalized_words(&unscoped[prefix.len()..])
    })
}

fn is_camel(s: &[u8]) -> bool {
    if s.first().is_none_or(|b| !b.is_ascii_lowercase()) {
        return false;
    }
    if !s.iter().all(u8::is_ascii_alphanumeric) {
        return false;
    }
    if s.iter().any(u8::is_ascii_uppercase) {
        return true;
    }
    let letters = s.iter().take_while(|b| b.is_ascii_lowercase()).count();
    letters >= 2 && s[letters..].iter().all(u8::is_ascii_digit)
}
