//! Finite automata and finite languages.
//!
//! [`Dfa`] allows partial transition functions: a missing transition rejects.
//! Completion, minimization, products, reversal, determinization and word
//! counting are all pure functions returning new automata.

mod alphabet;
mod dfa;
mod essential;
mod format;
mod language;
mod nfa;
mod regex;

pub use alphabet::{Alphabet, Symbol, Word, EMPTY_WORD};
pub use dfa::{Dfa, ProductMode, StateId};
pub use essential::EssentialGraph;
pub use format::FormatError;
pub use language::FiniteLanguage;
pub use nfa::Nfa;
pub use regex::RegexExpr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet contains duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("`{0}` is not a valid symbol name")]
    InvalidSymbol(String),
    #[error("symbol `{0}` is not part of the alphabet")]
    UnknownSymbol(String),
    #[error("symbol index {0} is outside the alphabet")]
    SymbolOutOfRange(Symbol),
    #[error("state {state} is outside the valid range 0..{count}")]
    InvalidState { state: StateId, count: usize },
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("duplicate transition from state {state} on `{symbol}`")]
    DuplicateTransition { state: StateId, symbol: String },
    #[error("alphabets differ: [{0}] vs [{1}]")]
    AlphabetMismatch(String, String),
    #[error("regular expression: {0}")]
    Regex(String),
}
