//! Entropy of sofic shifts and the numeric bounds relating `h(X)` and `h(W(X))`.
//!
//! All logarithms are base 2 unless a function name says otherwise.

mod bounds;
mod counts;
mod roots;
mod spectral;

pub use bounds::{entropy_lower_bound, upper_bound_check, LnFactorials, UpperBoundReport, HYPOTHESIS_TOLERANCE};
pub use counts::{
    entropy_word_count, log2_biguint, lower_bound_check, max_b_density, DensityProfile, LowerBoundReport,
    LowerBoundRow, WordCountEntropy,
};
pub use roots::{binomial_eps, gap_root};
pub use spectral::{entropy_spectral, spectral_radius, SpectralResult};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EntropyError {
    #[error("the language has no words of length {0}")]
    EmptyLanguage(usize),
    #[error("expected an automaton over `A B`, found `{0}`")]
    NotPlayerAlphabet(String),
    #[error("{0}")]
    InvalidArgument(String),
}
