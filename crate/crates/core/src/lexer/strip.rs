use crate::diagnostics::Diagnostic;

use super::LanguageProfile;

/// Source text with comments and literal contents blanked out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stripped {
    pub text: String,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Clone, Copy)]
enum State {
    Code,
    LineComment,
    BlockComment { start_line: usize },
    Literal { quote: char, start_line: usize },
}

/// Blanks comments, string/char literal contents and `#include` targets,
/// replacing every removed character with a space. Newlines (and carriage
/// returns) are kept so line numbers are unchanged.
///
/// Literal quotes stay in place so `printf("hi")` becomes `printf("  ")`.
/// A literal that runs into a raw newline is closed there; one that runs into
/// end of file blanks the remainder. Both produce a diagnostic.
pub fn strip_noise(source: &str, profile: &LanguageProfile) -> Stripped {
    let chars: Vec<char> = source.chars().collect();
    let mut out = String::with_capacity(source.len());
    let mut diagnostics = Vec::new();
    let mut state = State::Code;
    let mut line = 1usize;
    // Only whitespace seen so far on the current line (in code).
    let mut line_start = true;
    let mut i = 0;

    while i < chars.len() {
        let ch = chars[i];
        let next = chars.get(i + 1).copied();
        match state {
            State::Code => match ch {
                '/' if next == Some('/') => {
                    out.push_str("  ");
                    i += 2;
                    state = State::LineComment;
                    continue;
                }
                '/' if next == Some('*') => {
                    out.push_str("  ");
                    i += 2;
                    state = State::BlockComment { start_line: line };
                    continue;
                }
                '"' | '\'' => {
                    out.push(ch);
                    state = State::Literal { quote: ch, start_line: line };
                    line_start = false;
                }
                '#' if line_start && profile.has_preprocessor() => {
                    i = copy_directive_head(&chars, i, &mut out);
                    line_start = false;
                    continue;
                }
                '\n' => {
                    out.push('\n');
                    line += 1;
                    line_start = true;
                }
                c => {
                    if !c.is_whitespace() {
                        line_start = false;
                    }
                    out.push(c);
                }
            },
            State::LineComment => {
                if ch == '\n' {
                    out.push('\n');
                    line += 1;
                    line_start = true;
                    state = State::Code;
                } else {
                    out.push(blank(ch));
                }
            }
            State::BlockComment { .. } => {
                if ch == '*' && next == Some('/') {
                    out.push_str("  ");
                    i += 2;
                    state = State::Code;
                    continue;
                }
                if ch == '\n' {
                    line += 1;
                }
                out.push(blank(ch));
            }
            State::Literal { quote, start_line } => {
                if ch == '\\' {
                    i += 1;
                    // A backslash-newline is a line continuation and keeps its
                    // backslash so that stripping again sees the same text.
                    match chars.get(i).copied() {
                        Some('\n') => {
                            out.push_str("\\\n");
                            line += 1;
                        }
                        Some('\r') if chars.get(i + 1) == Some(&'\n') => {
                            out.push_str("\\\r\n");
                            line += 1;
                            i += 1;
                        }
                        Some(c) => {
                            out.push(' ');
                            out.push(blank(c));
                        }
                        None => out.push(' '),
                    }
                    i += 1;
                    continue;
                }
                if ch == quote {
                    out.push(ch);
                    state = State::Code;
                } else if ch == '\n' {
                    diagnostics.push(Diagnostic::at_line(
                        start_line,
                        format!("unterminated {} literal closed at end of line", literal_kind(quote)),
                    ));
                    out.push('\n');
                    line += 1;
                    line_start = true;
                    state = State::Code;
                } else {
                    out.push(blank(ch));
                }
            }
        }
        i += 1;
    }

    match state {
        State::BlockComment { start_line } => diagnostics.push(Diagnostic::at_line(
            start_line,
            "unterminated block comment blanked to end of file",
        )),
        State::Literal { quote, start_line } => diagnostics.push(Diagnostic::at_line(
            start_line,
            format!("unterminated {} literal blanked to end of file", literal_kind(quote)),
        )),
        State::Code | State::LineComment => {}
    }

    Stripped { text: out, diagnostics }
}

fn blank(ch: char) -> char {
    match ch {
        '\n' | '\r' => ch,
        _ => ' ',
    }
}

fn literal_kind(quote: char) -> &'static str {
    if quote == '"' {
        "string"
    } else {
        "character"
    }
}

/// Copies `#`, the directive name and, for `#include <...>`, the delimiters
/// with a blanked target. Returns the index of the first unconsumed char.
/// Quoted include targets are left to the literal handling.
fn copy_directive_head(chars: &[char], start: usize, out: &mut String) -> usize {
    let mut i = start;
    out.push('#');
    i += 1;
    while i < chars.len() && matches!(chars[i], ' ' | '\t') {
        out.push(chars[i]);
        i += 1;
    }
    let name_start = i;
    while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
        out.push(chars[i]);
        i += 1;
    }
    let name: String = chars[name_start..i].iter().collect();
    if name != "include" && name != "include_next" && name != "import" {
        return i;
    }
    while i < chars.len() && matches!(chars[i], ' ' | '\t') {
        out.push(chars[i]);
        i += 1;
    }
    if chars.get(i) != Some(&'<') {
        return i;
    }
    out.push('<');
    i += 1;
    while i < chars.len() && chars[i] != '>' && chars[i] != '\n' {
        out.push(blank(chars[i]));
        i += 1;
    }
    if chars.get(i) == Some(&'>') {
        out.push('>');
        i += 1;
    }
    i
}
