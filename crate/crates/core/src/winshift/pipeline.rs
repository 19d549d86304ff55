use std::collections::HashMap;

use super::alternating::require_complete;
use super::WinshiftError;
use crate::automata::{Alphabet, Dfa, Nfa, StateId, Symbol};
use crate::langgames::Player;

/// DFA for the reversal of `W(L(d))`, together with the subset of `d`'s
/// states that each of its states stands for.
///
/// Orders are read right to left. The start subset is the accepting set of
/// `d`; reading `A` maps `P` to the states with some successor in `P`,
/// reading `B` to the states with all successors in `P`. A subset accepts
/// iff it contains the initial state of `d`. The empty subset is kept as an
/// explicit sink and states are numbered breadth-first.
pub fn winning_reversed_subsets(d: &Dfa) -> Result<(Dfa, Vec<Vec<StateId>>), WinshiftError> {
    require_complete(d)?;
    let players = Alphabet::players();
    let start: Vec<StateId> = d.accepting_states().collect();
    let mut index: HashMap<Vec<StateId>, StateId> = HashMap::from([(start.clone(), 0)]);
    let mut subsets = vec![start];
    let mut delta = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        let mut member = vec![false; d.num_states()];
        for &q in &subsets[i] {
            member[q] = true;
        }
        let mut row = Vec::with_capacity(2);
        for letter in [Player::A, Player::B] {
            let target: Vec<StateId> = (0..d.num_states())
                .filter(|&q| {
                    let mut hits = d.alphabet().iter().map(|c| member[d.next(q, c).expect("complete")]);
                    match letter {
                        Player::A => hits.any(|h| h),
                        Player::B => hits.all(|h| h),
                    }
                })
                .collect();
            let id = *index.entry(target.clone()).or_insert_with(|| {
                subsets.push(target);
                subsets.len() - 1
            });
            row.push(Some(id));
        }
        delta.push(row);
        i += 1;
    }
    let accepting = subsets.iter().map(|s| s.contains(&d.initial())).collect();
    let dfa = Dfa::from_table(players, delta, 0, accepting)?;
    Ok((dfa, subsets))
}

/// DFA for the reversal of `W(L(d))`. See [`winning_reversed_subsets`].
pub fn winning_reversed_dfa(d: &Dfa) -> Result<Dfa, WinshiftError> {
    Ok(winning_reversed_subsets(d)?.0)
}

/// Minimal DFA for `W(L(d))`, by reversing [`winning_reversed_dfa`].
pub fn winning_language_dfa(d: &Dfa) -> Result<Dfa, WinshiftError> {
    Ok(winning_reversed_dfa(d)?.reversed().determinize().minimized())
}

/// Factor language of the two-directional winning shift: the words of
/// `W(L(d))` that extend to bi-infinite sequences inside it.
///
/// Computed by trimming the forward DFA to its essential part, and checked
/// against the fixpoint of `L ↦ {w : ∃ a, b. awb ∈ L}`. An empty language
/// means the two-directional winning shift is empty.
pub fn two_directional_winning_shift(d: &Dfa) -> Result<Dfa, WinshiftError> {
    let forward = winning_language_dfa(d)?;
    let trimmed = forward.trim_essential().factor_dfa();
    let fixpoint = extension_fixpoint(&forward)?;
    if trimmed != fixpoint {
        return Err(WinshiftError::TwoDirectionalMismatch);
    }
    Ok(trimmed)
}

fn extension_fixpoint(d: &Dfa) -> Result<Dfa, WinshiftError> {
    let mut current = d.minimized();
    let limit = (current.num_states() + 2).pow(2);
    for _ in 0..limit {
        let next = shrink_once(&current);
        if next == current {
            return Ok(current);
        }
        current = next;
    }
    Err(WinshiftError::NoFixpoint(limit))
}

/// `{w : ∃ a, b. awb ∈ L(d)}` as a minimal DFA.
fn shrink_once(d: &Dfa) -> Dfa {
    let starts: Vec<StateId> = d.alphabet().iter().filter_map(|c| d.next(d.initial(), c)).collect();
    let mut fresh = Nfa::new(d.alphabet().clone(), d.num_states());
    for (p, c, q) in d.transitions() {
        fresh.add_transition(p, c, q);
    }
    for q in starts {
        fresh.set_initial(q);
    }
    for q in 0..d.num_states() {
        let extends = d.alphabet().iter().any(|c| d.next(q, c).is_some_and(|r| d.is_accepting(r)));
        fresh.set_accepting(q, extends);
    }
    fresh.determinize().minimized()
}

/// Whether lowering any `B` of an accepted order to `A` keeps it accepted.
pub fn is_downward_closed(d: &Dfa) -> Result<bool, WinshiftError> {
    if !d.alphabet().is_players() {
        return Err(WinshiftError::NotPlayerAlphabet(d.alphabet().to_string()));
    }
    let (a, b) = (Player::A.symbol(), Player::B.symbol());
    let mut lowered = Nfa::from_dfa(d);
    for (p, c, q) in d.transitions() {
        if c == b {
            lowered.add_transition(p, a, q);
        }
    }
    Ok(lowered.determinize().is_subset_of(d)?)
}

/// Whether `a A^k b` is accepted for every `k` in `kmin..=kmax`.
pub fn mixing_witness_check(d: &Dfa, a: &[Symbol], b: &[Symbol], kmin: usize, kmax: usize) -> bool {
    let letter = Player::A.symbol();
    (kmin..=kmax).all(|k| {
        let mut word = a.to_vec();
        word.extend(std::iter::repeat_n(letter, k));
        word.extend_from_slice(b);
        d.accepts(&word)
    })
}

/// The automata produced by the winning-shift pipeline.
#[derive(Clone, Debug)]
pub struct WinningShiftPresentation {
    /// Accepts the reversal of `W(B(X))`.
    pub reversed_dfa: Dfa,
    /// Minimal DFA for `W(B(X))`.
    pub forward_dfa: Dfa,
    /// Factor language of the two-directional winning shift, when requested.
    pub two_directional_dfa: Option<Dfa>,
}

impl WinningShiftPresentation {
    pub fn compute(d: &Dfa, two_directional: bool) -> Result<Self, WinshiftError> {
        let reversed_dfa = winning_reversed_dfa(d)?;
        let forward_dfa = reversed_dfa.reversed().determinize().minimized();
        let two_directional_dfa = if two_directional { Some(two_directional_winning_shift(d)?) } else { None };
        Ok(Self { reversed_dfa, forward_dfa, two_directional_dfa })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{FiniteLanguage, RegexExpr};
    use crate::langgames::winning_set;
    use crate::winshift::AlternatingAutomaton;

    fn even() -> Dfa {
        let s = Alphabet::binary();
        let t = [(0, 0, 0), (0, 1, 1), (1, 0, 2), (1, 1, 1), (2, 0, 1), (2, 1, 3), (3, 0, 3), (3, 1, 3)];
        Dfa::new(s, 4, 0, [0, 1, 2], t).unwrap()
    }

    fn regex(alphabet: &Alphabet, e: &str) -> Dfa {
        RegexExpr::parse(alphabet, e).unwrap().to_dfa(alphabet)
    }

    fn players_regex(e: &str) -> Dfa {
        regex(&Alphabet::players(), e)
    }

    #[test]
    fn reversed_subsets_for_even_shift() {
        let (r, subsets) = winning_reversed_subsets(&even()).unwrap();
        assert_eq!(subsets, vec![vec![0, 1, 2], vec![0, 1], vec![0], vec![]]);
        let table: Vec<_> = r.transitions().collect();
        assert_eq!(table, vec![(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 2), (2, 0, 2), (2, 1, 3), (3, 0, 3), (3, 1, 3)]);
        assert_eq!(r.accepting_states().collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn even_shift_winning_language() {
        let w = winning_language_dfa(&even()).unwrap();
        let expected = players_regex("A*BB(A + AB)*").factor_closure();
        assert!(w.language_eq(&expected).unwrap());
        assert!(is_downward_closed(&w).unwrap());
        assert!(mixing_witness_check(&w, &[1], &[1], 1, 10));
        // BB occurs at most once in a winning order
        assert!(!mixing_witness_check(&w, &[1, 1], &[1, 1], 1, 10));
        assert!(mixing_witness_check(&w, &[], &[], 0, 10));
        let two = two_directional_winning_shift(&even()).unwrap();
        assert!(two.language_eq(&w).unwrap());
    }

    #[test]
    fn full_shift_wins_everything() {
        let full = Dfa::universal(Alphabet::digits(2));
        let r = winning_reversed_dfa(&full).unwrap();
        assert_eq!(r, Dfa::universal(Alphabet::players()));
        assert!(AlternatingAutomaton::from_dfa(&full).unwrap().accepts(&[1, 0, 1, 1]));
    }

    #[test]
    fn incomplete_input_rejected() {
        let golden = regex(&Alphabet::binary(), "(0 + 10)*(λ + 1)");
        let partial = Dfa::new(Alphabet::binary(), 2, 0, [0, 1], [(0, 0, 0), (0, 1, 1), (1, 0, 0)]).unwrap();
        assert!(matches!(winning_reversed_dfa(&partial), Err(WinshiftError::Incomplete { .. })));
        assert!(AlternatingAutomaton::from_dfa(&partial).is_err());
        assert!(winning_reversed_dfa(&golden).is_ok());
    }

    #[test]
    fn alternating_semantics_match_game_oracle() {
        let golden = regex(&Alphabet::binary(), "(0 + 10)*(λ + 1)");
        let alt = AlternatingAutomaton::from_dfa(&golden).unwrap();
        let w = winning_language_dfa(&golden).unwrap();
        for n in 0..=8 {
            let slice = winning_set(&golden.enumerate(n)).unwrap();
            assert_eq!(w.enumerate(n), slice, "n = {n}");
            for order in Dfa::universal(Alphabet::players()).enumerate(n).words() {
                if n <= 6 {
                    assert_eq!(alt.accepts(&order), slice.contains(&order));
                }
            }
        }
        // B alone is won, but not BB
        assert!(w.accepts(&[1]));
        assert!(!w.accepts(&[1, 1]));
    }

    #[test]
    fn zero_one_shift() {
        let s = Alphabet::binary();
        let x = regex(&s, "0*1*");
        let w = winning_language_dfa(&x).unwrap();
        assert!(w.language_eq(&players_regex("A*(λ + B)A*")).unwrap());
        let two = two_directional_winning_shift(&x).unwrap();
        assert!(two.language_eq(&players_regex("A*(λ + B)A*")).unwrap());
    }

    #[test]
    fn downward_closure_examples() {
        assert!(is_downward_closed(&players_regex("A*")).unwrap());
        assert!(!is_downward_closed(&players_regex("(AB)*")).unwrap());
        assert!(is_downward_closed(&players_regex("(A + AB)*(λ + B)")).unwrap());
        assert!(is_downward_closed(&Dfa::universal(Alphabet::binary())).is_err());
    }

    #[test]
    fn fixpoint_of_finite_language_is_empty() {
        let s = Alphabet::binary();
        let d = FiniteLanguage::from_words(s, [vec![0, 1]]).to_dfa();
        let two = shrink_once(&d.factor_closure());
        assert!(two.accepts(&[]));
        assert!(!two.accepts(&[0]));
        assert!(extension_fixpoint(&d.factor_closure()).unwrap().enumerate(0).is_empty());
    }
}
