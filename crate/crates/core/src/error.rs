use thiserror::Error;

use crate::automata::{AutomatonError, FormatError};
use crate::entropy::EntropyError;
use crate::langgames::GameError;
use crate::winshift::WinshiftError;
use crate::zoo::ZooError;

/// Any failure surfaced by the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Winshift(#[from] WinshiftError),
    #[error(transparent)]
    Entropy(#[from] EntropyError),
    #[error(transparent)]
    Zoo(#[from] ZooError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Invalid(String),
}
