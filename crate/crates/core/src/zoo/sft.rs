use std::collections::VecDeque;

use crate::automata::{Alphabet, Dfa, FiniteLanguage, StateId};

/// Factor language of the two-sided shift avoiding every word of `forbidden`.
///
/// Words avoiding `forbidden` are recognized by the pattern-matching
/// automaton of the forbidden set; its essential part presents the shift.
pub fn sft_from_forbidden(alphabet: &Alphabet, forbidden: &FiniteLanguage) -> Dfa {
    avoiding_automaton(alphabet, &forbidden.words()).trim_essential().factor_dfa()
}

/// Partial DFA accepting every word that contains no member of `patterns`.
pub(crate) fn avoiding_automaton(alphabet: &Alphabet, patterns: &[Vec<usize>]) -> Dfa {
    let k = alphabet.len();
    let mut goto: Vec<Vec<Option<usize>>> = vec![vec![None; k]];
    let mut bad = vec![false];
    for p in patterns {
        let mut node = 0;
        for &c in p {
            node = match goto[node][c] {
                Some(next) => next,
                None => {
                    goto.push(vec![None; k]);
                    bad.push(false);
                    goto[node][c] = Some(goto.len() - 1);
                    goto.len() - 1
                }
            };
        }
        bad[node] = true;
    }

    let n = goto.len();
    let mut fail = vec![0; n];
    let mut delta = vec![vec![0; k]; n];
    let mut queue = VecDeque::new();
    for c in 0..k {
        match goto[0][c] {
            Some(child) => {
                delta[0][c] = child;
                queue.push_back(child);
            }
            None => delta[0][c] = 0,
        }
    }
    while let Some(node) = queue.pop_front() {
        bad[node] |= bad[fail[node]];
        for c in 0..k {
            match goto[node][c] {
                Some(child) => {
                    fail[child] = delta[fail[node]][c];
                    delta[node][c] = child;
                    queue.push_back(child);
                }
                None => delta[node][c] = delta[fail[node]][c],
            }
        }
    }

    if bad[0] {
        return Dfa::empty(alphabet.clone());
    }
    let mut id: Vec<Option<StateId>> = vec![None; n];
    let mut next_id = 0;
    for q in 0..n {
        if !bad[q] {
            id[q] = Some(next_id);
            next_id += 1;
        }
    }
    let table = (0..n).filter(|&q| !bad[q]).map(|q| (0..k).map(|c| id[delta[q][c]]).collect()).collect();
    Dfa::from_table(alphabet.clone(), table, 0, vec![true; next_id]).expect("well-formed pattern automaton")
}
