use super::{Alphabet, Dfa, Nfa, StateId, Symbol};

/// The part of a deterministic presentation that carries bi-infinite paths.
///
/// Obtained by keeping the useful states (reachable and co-reachable) and then
/// repeatedly deleting states without incoming or outgoing edges. There is no
/// distinguished initial state: every finite path is a factor of a point of
/// the presented two-sided shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialGraph {
    alphabet: Alphabet,
    origins: Vec<StateId>,
    delta: Vec<Vec<Option<usize>>>,
}

impl EssentialGraph {
    pub(crate) fn from_dfa(d: &Dfa) -> Self {
        let n = d.num_states();
        let mut alive = d.useful_states();
        loop {
            let mut indeg = vec![0usize; n];
            let mut outdeg = vec![0usize; n];
            for (p, _, q) in d.transitions() {
                if alive[p] && alive[q] {
                    outdeg[p] += 1;
                    indeg[q] += 1;
                }
            }
            let mut changed = false;
            for q in 0..n {
                if alive[q] && (indeg[q] == 0 || outdeg[q] == 0) {
                    alive[q] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let origins: Vec<StateId> = (0..n).filter(|&q| alive[q]).collect();
        let mut new_id = vec![None; n];
        for (i, &q) in origins.iter().enumerate() {
            new_id[q] = Some(i);
        }
        let delta = origins
            .iter()
            .map(|&q| d.alphabet().iter().map(|c| d.next(q, c).and_then(|r| new_id[r])).collect())
            .collect();
        Self { alphabet: d.alphabet().clone(), origins, delta }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_empty(&self) -> bool {
        self.origins.is_empty()
    }

    pub fn num_states(&self) -> usize {
        self.origins.len()
    }

    /// State ids of the source automaton, in increasing order.
    pub fn origins(&self) -> &[StateId] {
        &self.origins
    }

    pub fn next(&self, q: usize, c: Symbol) -> Option<usize> {
        self.delta[q][c]
    }

    /// Entry `[p][q]` counts the symbols labelling edges `p -> q`.
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.num_states();
        let mut m = vec![vec![0u64; n]; n];
        for (p, row) in self.delta.iter().enumerate() {
            for &q in row.iter().flatten() {
                m[p][q] += 1;
            }
        }
        m
    }

    /// Minimal automaton for the labels of all finite paths in the graph.
    pub fn factor_dfa(&self) -> Dfa {
        if self.is_empty() {
            return Dfa::empty(self.alphabet.clone()).minimized();
        }
        let mut nfa = Nfa::new(self.alphabet.clone(), self.num_states());
        for (p, row) in self.delta.iter().enumerate() {
            nfa.set_initial(p);
            nfa.set_accepting(p, true);
            for (c, q) in row.iter().enumerate() {
                if let Some(q) = q {
                    nfa.add_transition(p, c, *q);
                }
            }
        }
        nfa.determinize().minimized()
    }
}
