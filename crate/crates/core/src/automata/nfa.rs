use std::collections::{BTreeSet, HashMap};

use super::{Alphabet, Dfa, StateId, Symbol};

/// Nondeterministic automaton with ε-moves and a set of initial states.
#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Alphabet,
    initial: BTreeSet<StateId>,
    accepting: Vec<bool>,
    delta: Vec<Vec<Vec<StateId>>>,
    epsilon: Vec<Vec<StateId>>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet, num_states: usize) -> Self {
        let k = alphabet.len();
        Self {
            alphabet,
            initial: BTreeSet::new(),
            accepting: vec![false; num_states],
            delta: vec![vec![Vec::new(); k]; num_states],
            epsilon: vec![Vec::new(); num_states],
        }
    }

    pub fn from_dfa(d: &Dfa) -> Self {
        let mut nfa = Self::new(d.alphabet().clone(), d.num_states());
        for (p, c, q) in d.transitions() {
            nfa.add_transition(p, c, q);
        }
        for q in d.accepting_states() {
            nfa.set_accepting(q, true);
        }
        nfa.set_initial(d.initial());
        nfa
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn add_state(&mut self) -> StateId {
        self.accepting.push(false);
        self.delta.push(vec![Vec::new(); self.alphabet.len()]);
        self.epsilon.push(Vec::new());
        self.accepting.len() - 1
    }

    pub fn add_transition(&mut self, from: StateId, symbol: Symbol, to: StateId) {
        let targets = &mut self.delta[from][symbol];
        if !targets.contains(&to) {
            targets.push(to);
        }
    }

    pub fn add_epsilon(&mut self, from: StateId, to: StateId) {
        self.epsilon[from].push(to);
    }

    pub fn set_initial(&mut self, q: StateId) {
        self.initial.insert(q);
    }

    pub fn set_accepting(&mut self, q: StateId, accepting: bool) {
        self.accepting[q] = accepting;
    }

    /// Removes the states not marked in `keep`, renumbering the rest in order.
    pub fn retain_states(&mut self, keep: &[bool]) {
        let mut new_id = vec![None; self.num_states()];
        let mut next = 0;
        for (q, &k) in keep.iter().enumerate() {
            if k {
                new_id[q] = Some(next);
                next += 1;
            }
        }
        let map = |v: &[StateId]| v.iter().filter_map(|&q| new_id[q]).collect::<Vec<_>>();
        let kept = |q: &usize| keep[*q];
        self.delta =
            (0..self.num_states()).filter(kept).map(|q| self.delta[q].iter().map(|t| map(t)).collect()).collect();
        self.epsilon = (0..self.num_states()).filter(kept).map(|q| map(&self.epsilon[q])).collect();
        self.initial = self.initial.iter().filter_map(|&q| new_id[q]).collect();
        self.accepting = (0..self.num_states()).filter(kept).map(|q| self.accepting[q]).collect();
    }

    fn closure(&self, set: &mut BTreeSet<StateId>) {
        let mut stack: Vec<StateId> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &r in &self.epsilon[q] {
                if set.insert(r) {
                    stack.push(r);
                }
            }
        }
    }

    /// Subset construction over reachable subsets only. Transitions into the
    /// empty subset are left undefined, so the result may be partial.
    pub fn determinize(&self) -> Dfa {
        let mut start = self.initial.clone();
        self.closure(&mut start);
        let mut index: HashMap<BTreeSet<StateId>, StateId> = HashMap::from([(start.clone(), 0)]);
        let mut subsets = vec![start];
        let mut delta = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let mut row = Vec::with_capacity(self.alphabet.len());
            for c in self.alphabet.iter() {
                let mut target: BTreeSet<StateId> =
                    subsets[i].iter().flat_map(|&q| self.delta[q][c].iter().copied()).collect();
                self.closure(&mut target);
                if target.is_empty() {
                    row.push(None);
                    continue;
                }
                let id = match index.get(&target) {
                    Some(&id) => id,
                    None => {
                        index.insert(target.clone(), subsets.len());
                        subsets.push(target);
                        subsets.len() - 1
                    }
                };
                row.push(Some(id));
            }
            delta.push(row);
            i += 1;
        }
        let accepting = subsets.iter().map(|s| s.iter().any(|&q| self.accepting[q])).collect();
        if delta.is_empty() {
            return Dfa::empty(self.alphabet.clone());
        }
        Dfa::from_table(self.alphabet.clone(), delta, 0, accepting).expect("subset construction is well-formed")
    }

    /// Relabels every transition through `map`, producing an automaton over `target`.
    pub fn relabel(&self, target: Alphabet, map: impl Fn(Symbol) -> Symbol) -> Nfa {
        let mut out = Nfa::new(target, self.num_states());
        for (p, row) in self.delta.iter().enumerate() {
            for (c, targets) in row.iter().enumerate() {
                for &q in targets {
                    out.add_transition(p, map(c), q);
                }
            }
            for &q in &self.epsilon[p] {
                out.add_epsilon(p, q);
            }
        }
        out.initial = self.initial.clone();
        out.accepting = self.accepting.clone();
        out
    }
}
