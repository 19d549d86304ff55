use std::fmt::Write as _;

use super::WinshiftError;
use crate::automata::{Alphabet, Dfa, StateId, Symbol};
use crate::langgames::Player;

/// How a state combines its successors when reading a game letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Existential,
    Universal,
}

impl Mode {
    pub fn for_player(p: Player) -> Mode {
        match p {
            Player::A => Mode::Existential,
            Player::B => Mode::Universal,
        }
    }
}

/// Alternating automaton over `A B` sharing its states with a complete DFA.
///
/// From state `q`, both letters lead to the successor set `{δ(q,c) : c ∈ S}`;
/// `A` needs one accepting branch, `B` needs all of them.
#[derive(Clone, Debug)]
pub struct AlternatingAutomaton {
    alphabet: Alphabet,
    initial: StateId,
    accepting: Vec<bool>,
    successors: Vec<Vec<StateId>>,
}

impl AlternatingAutomaton {
    pub fn from_dfa(d: &Dfa) -> Result<Self, WinshiftError> {
        require_complete(d)?;
        let successors = (0..d.num_states())
            .map(|q| {
                let mut next: Vec<StateId> = d.alphabet().iter().filter_map(|c| d.next(q, c)).collect();
                next.sort_unstable();
                next.dedup();
                next
            })
            .collect();
        Ok(Self {
            alphabet: Alphabet::players(),
            initial: d.initial(),
            accepting: (0..d.num_states()).map(|q| d.is_accepting(q)).collect(),
            successors,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn successors(&self, q: StateId) -> &[StateId] {
        &self.successors[q]
    }

    pub fn mode(&self, letter: Symbol) -> Mode {
        Mode::for_player(Player::from_symbol(letter).expect("letter of A B"))
    }

    /// Evaluates acceptance of a turn order directly from the recursive rule.
    pub fn accepts(&self, order: &[Symbol]) -> bool {
        self.accepts_from(self.initial, order)
    }

    fn accepts_from(&self, q: StateId, order: &[Symbol]) -> bool {
        let Some((&letter, rest)) = order.split_first() else {
            return self.accepting[q];
        };
        let mut branches = self.successors[q].iter().map(|&r| self.accepts_from(r, rest));
        match self.mode(letter) {
            Mode::Existential => branches.any(|b| b),
            Mode::Universal => branches.all(|b| b),
        }
    }

    /// Text rendering: the DFA header lines, then one line per state and
    /// letter of the form `q A exists r s ...` or `q B forall r s ...`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alphabet: {}", self.alphabet);
        let _ = writeln!(out, "states: {}", self.num_states());
        let _ = writeln!(out, "initial: {}", self.initial);
        let acc: Vec<String> = (0..self.num_states()).filter(|&q| self.accepting[q]).map(|q| q.to_string()).collect();
        let _ = writeln!(out, "accepting: {}", acc.join(" "));
        for q in 0..self.num_states() {
            let targets: Vec<String> = self.successors[q].iter().map(|r| r.to_string()).collect();
            let _ = writeln!(out, "{q} A exists {}", targets.join(" "));
            let _ = writeln!(out, "{q} B forall {}", targets.join(" "));
        }
        out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"
    }
}

pub(super) fn require_complete(d: &Dfa) -> Result<(), WinshiftError> {
    for q in 0..d.num_states() {
        for c in d.alphabet().iter() {
            if d.next(q, c).is_none() {
                return Err(WinshiftError::Incomplete { state: q, symbol: d.alphabet().name(c).to_string() });
            }
        }
    }
    Ok(())
}
