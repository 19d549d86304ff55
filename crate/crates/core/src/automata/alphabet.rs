use std::fmt;
use std::sync::Arc;

use super::AutomatonError;

/// Index of a symbol inside its [`Alphabet`].
pub type Symbol = usize;

/// A finite word, stored as alphabet indices. The empty vector is the empty word.
pub type Word = Vec<Symbol>;

/// Rendering of the empty word in text formats.
pub const EMPTY_WORD: &str = "λ";

/// An ordered, duplicate-free list of printable symbol names.
///
/// The order is significant: it fixes the index of each symbol, the
/// breadth-first order used for canonical state numbering, and the
/// lexicographic order of words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Arc<[String]>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self, AutomatonError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(AutomatonError::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s == EMPTY_WORD || s.chars().any(|c| c.is_whitespace() || c == '#') {
                return Err(AutomatonError::InvalidSymbol(s.clone()));
            }
            if symbols[..i].contains(s) {
                return Err(AutomatonError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Self { symbols: symbols.into() })
    }

    /// The digit alphabet `0 1 ... k`.
    pub fn digits(k: usize) -> Self {
        Self::new((0..=k).map(|i| i.to_string())).expect("digit names are valid")
    }

    /// The binary alphabet `0 1`.
    pub fn binary() -> Self {
        Self::digits(1)
    }

    /// The alphabet `A B` of turn orders.
    pub fn players() -> Self {
        Self::new(["A", "B"]).expect("player names are valid")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, symbol: Symbol) -> &str {
        &self.symbols[symbol]
    }

    pub fn index(&self, name: &str) -> Option<Symbol> {
        self.symbols.iter().position(|s| s == name)
    }

    pub fn iter(&self) -> std::ops::Range<Symbol> {
        0..self.len()
    }

    /// True when every symbol name is a single character, so words can be
    /// written without separators.
    pub fn is_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// True for the alphabet `A B` exactly.
    pub fn is_players(&self) -> bool {
        self.symbols.len() == 2 && self.symbols[0] == "A" && self.symbols[1] == "B"
    }

    /// Parses a word. Whitespace-separated tokens are looked up one by one;
    /// a single token over a single-character alphabet is split into characters.
    pub fn parse_word(&self, text: &str) -> Result<Word, AutomatonError> {
        let text = text.trim();
        if text.is_empty() || text == EMPTY_WORD {
            return Ok(Vec::new());
        }
        let lookup = |tok: &str| self.index(tok).ok_or_else(|| AutomatonError::UnknownSymbol(tok.to_string()));
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() == 1 && self.index(tokens[0]).is_none() && self.is_single_char() {
            let mut buf = [0u8; 4];
            return tokens[0].chars().map(|c| lookup(c.encode_utf8(&mut buf))).collect();
        }
        tokens.into_iter().map(lookup).collect()
    }

    pub fn format_word(&self, word: &[Symbol]) -> String {
        if word.is_empty() {
            return EMPTY_WORD.to_string();
        }
        let names = word.iter().map(|&s| self.name(s));
        if self.is_single_char() {
            names.collect()
        } else {
            names.collect::<Vec<_>>().join(" ")
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.symbols.iter()).finish()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbols.join(" "))
    }
}
