//! Word games on subshifts: winning sets of finite languages, winning shifts
//! of sofic shifts, and the entropy relations between a shift and its
//! winning shift.

pub mod automata;
pub mod cli;
pub mod entropy;
mod error;
pub mod langgames;
pub mod verify;
pub mod winshift;
pub mod zoo;

pub use error::Error;
