//! Plain-text formats for automata and finite languages.
//!
//! DFA files:
//!
//! ```text
//! alphabet: 0 1
//! states: 4
//! initial: 0
//! accepting: 0 1 2
//! 0 0 0
//! 0 1 1
//! ```
//!
//! Finite-language files start with an `alphabet:` line followed by one word
//! per line, `λ` for the empty word. In both formats `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Alphabet, AutomatonError, Dfa, FiniteLanguage, StateId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: expected `{expected}`")]
    MissingHeader { line: usize, expected: &'static str },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Automaton {
        line: usize,
        #[source]
        source: AutomatonError,
    },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &'static str,
    last_line: usize,
) -> Result<(usize, &'a str), FormatError> {
    match lines.next() {
        Some((line, text)) => match text.strip_prefix(key).and_then(|r| r.strip_prefix(':')) {
            Some(rest) => Ok((line, rest.trim())),
            None => Err(FormatError::MissingHeader { line, expected: key }),
        },
        None => Err(FormatError::MissingHeader { line: last_line + 1, expected: key }),
    }
}

fn parse_alphabet(line: usize, rest: &str) -> Result<Alphabet, FormatError> {
    Alphabet::new(rest.split_whitespace()).map_err(|source| FormatError::Automaton { line, source })
}

fn parse_number(line: usize, token: &str) -> Result<usize, FormatError> {
    token.parse().map_err(|_| FormatError::Syntax { line, message: format!("`{token}` is not a number") })
}

impl Dfa {
    /// Serializes in the DFA text format. Transitions are listed by state,
    /// then by symbol.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alphabet: {}", self.alphabet());
        let _ = writeln!(out, "states: {}", self.num_states());
        let _ = writeln!(out, "initial: {}", self.initial());
        let accepting: Vec<String> = self.accepting_states().map(|q| q.to_string()).collect();
        let _ = writeln!(out, "accepting: {}", accepting.join(" ").trim_end());
        for (p, c, q) in self.transitions() {
            let _ = writeln!(out, "{p} {} {q}", self.alphabet().name(c));
        }
        out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"
    }

    pub fn parse_text(text: &str) -> Result<Dfa, FormatError> {
        let last = text.lines().count();
        let mut lines = content_lines(text);
        let (line, rest) = header(&mut lines, "alphabet", last)?;
        let alphabet = parse_alphabet(line, rest)?;
        let (line, rest) = header(&mut lines, "states", last)?;
        let num_states = parse_number(line, rest)?;
        let (line, rest) = header(&mut lines, "initial", last)?;
        let initial = parse_number(line, rest)?;
        let (acc_line, rest) = header(&mut lines, "accepting", last)?;
        let accepting =
            rest.split_whitespace().map(|t| parse_number(acc_line, t)).collect::<Result<Vec<StateId>, _>>()?;

        let mut transitions = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (line, text) in lines {
            let parts: Vec<&str> = text.split_whitespace().collect();
            let [from, symbol, to] = parts[..] else {
                return Err(FormatError::Syntax { line, message: "expected `from symbol to`".into() });
            };
            let from = parse_number(line, from)?;
            let to = parse_number(line, to)?;
            let c = alphabet.index(symbol).ok_or_else(|| FormatError::Automaton {
                line,
                source: AutomatonError::UnknownSymbol(symbol.to_string()),
            })?;
            if !seen.insert((from, c)) {
                return Err(FormatError::Automaton {
                    line,
                    source: AutomatonError::DuplicateTransition { state: from, symbol: symbol.to_string() },
                });
            }
            for q in [from, to] {
                if q >= num_states {
                    return Err(FormatError::Automaton {
                        line,
                        source: AutomatonError::InvalidState { state: q, count: num_states },
                    });
                }
            }
            transitions.push((from, c, to));
        }
        Dfa::new(alphabet, num_states, initial, accepting, transitions)
            .map_err(|source| FormatError::Automaton { line: acc_line, source })
    }
}

impl FiniteLanguage {
    /// Serializes in shortlex order.
    pub fn to_text(&self) -> String {
        let mut out = format!("alphabet: {}\n", self.alphabet());
        for w in self.words() {
            out.push_str(&self.alphabet().format_word(&w));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<FiniteLanguage, FormatError> {
        let last = text.lines().count();
        let mut lines = content_lines(text);
        let (line, rest) = header(&mut lines, "alphabet", last)?;
        let alphabet = parse_alphabet(line, rest)?;
        let mut lang = FiniteLanguage::new(alphabet.clone());
        for (line, text) in lines {
            let word = alphabet.parse_word(text).map_err(|source| FormatError::Automaton { line, source })?;
            lang.insert(&word);
        }
        Ok(lang)
    }
}
