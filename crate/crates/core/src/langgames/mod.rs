//! Finite word games solved by backward induction.
//!
//! In the ordered game on a target `L ⊂ S^n` with turn order `a ∈ {A,B}^n`,
//! player `a_i` picks the `i`-th symbol and A wins iff the finished word is
//! in `L`. The winning set `W(L)` collects the orders won by A. In the
//! counting game, A announces a set of `a_i` symbols at step `i` and B picks
//! one of them.

mod order;
mod solve;
mod winset;

pub use order::{CountingOrder, Player, TurnOrder};
pub use solve::{solve_game, GameResult, GameSolver, Strategy};
pub use winset::{counting_membership, counting_winning_set, right_special_count, winning_set, Limits};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("turn orders of length {length} exceed the supported maximum {max}")]
    OrderTooLong { length: usize, max: usize },
    #[error("orders of length {length} over {alphabet} set sizes exceed the cap n·log2|S| ≤ {cap}")]
    CapExceeded { length: usize, alphabet: usize, cap: u32 },
    #[error("expected a binary alphabet, found {0} symbols")]
    NotBinary(usize),
    #[error("counting order entry {value} at position {position} is outside 1..={alphabet}")]
    CountOutOfRange { position: usize, value: usize, alphabet: usize },
    #[error("invalid turn order `{0}`")]
    InvalidOrder(String),
}
