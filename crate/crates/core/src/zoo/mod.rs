//! Concrete shifts: SFTs from forbidden words, named examples, extensions,
//! projections, products and substitution languages.
//!
//! Every constructor returns a complete minimal DFA for the factor language
//! of a two-sided shift unless stated otherwise.

mod named;
mod sft;
mod substitution;
mod transform;

pub use named::{catalog, named_shift, shift_from_expression, ShiftParams, SHIFT_NAMES};
pub use sft::sft_from_forbidden;
pub use substitution::{substitution_factors, substitution_factors_up_to, Substitution};
pub use transform::{counting_projection, extend, shift_product};

use thiserror::Error;

use crate::automata::AutomatonError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error("unknown shift `{0}`; known shifts: {names}", names = SHIFT_NAMES.join(", "))]
    UnknownShift(String),
    #[error("expected a binary alphabet, found {0} symbols")]
    NotBinary(usize),
    #[error("{0}")]
    InvalidParameter(String),
    #[error("substitution never grows, so its language is finite")]
    NonGrowing,
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}
