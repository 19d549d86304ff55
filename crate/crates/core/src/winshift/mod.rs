//! Winning shifts of sofic shifts.
//!
//! Starting from a complete DFA for the language of a subshift `X`, the
//! pipeline builds the alternating automaton for `W(B(X))`, determinizes it
//! backwards into a DFA for the reversed language, and reverses that into a
//! minimal forward DFA. The two-directional winning shift keeps only the
//! words that extend infinitely in both directions.

mod alternating;
mod pipeline;

pub use alternating::{AlternatingAutomaton, Mode};
pub use pipeline::{
    is_downward_closed, mixing_witness_check, two_directional_winning_shift, winning_language_dfa,
    winning_reversed_dfa, winning_reversed_subsets, WinningShiftPresentation,
};

use thiserror::Error;

use crate::automata::AutomatonError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WinshiftError {
    #[error("the input DFA must be complete; state {state} has no transition on `{symbol}`")]
    Incomplete { state: usize, symbol: String },
    #[error("expected an automaton over `A B`, found `{0}`")]
    NotPlayerAlphabet(String),
    #[error("trimmed presentation and extension fixpoint disagree on the two-directional winning shift")]
    TwoDirectionalMismatch,
    #[error("extension fixpoint not reached after {0} iterations")]
    NoFixpoint(usize),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}
