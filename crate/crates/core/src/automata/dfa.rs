use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{Alphabet, AutomatonError, EssentialGraph, FiniteLanguage, Nfa, Symbol};

/// Index of a state inside an automaton.
pub type StateId = usize;

/// Acceptance rule of [`Dfa::product`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    Intersection,
    Union,
}

/// Deterministic automaton with a possibly partial transition function.
///
/// Always has at least one state. `PartialEq` compares the representation,
/// so two outputs of [`Dfa::minimized`] are equal exactly when their
/// languages are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    delta: Vec<Vec<Option<StateId>>>,
    initial: StateId,
    accepting: Vec<bool>,
}

impl Dfa {
    /// Builds an automaton from a transition list. Duplicate `(state, symbol)`
    /// pairs are rejected.
    pub fn new(
        alphabet: Alphabet,
        num_states: usize,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (StateId, Symbol, StateId)>,
    ) -> Result<Self, AutomatonError> {
        if num_states == 0 {
            return Err(AutomatonError::NoStates);
        }
        let check = |q: StateId| {
            if q < num_states {
                Ok(q)
            } else {
                Err(AutomatonError::InvalidState { state: q, count: num_states })
            }
        };
        check(initial)?;
        let mut acc = vec![false; num_states];
        for q in accepting {
            acc[check(q)?] = true;
        }
        let mut delta = vec![vec![None; alphabet.len()]; num_states];
        for (p, c, q) in transitions {
            check(p)?;
            check(q)?;
            if c >= alphabet.len() {
                return Err(AutomatonError::SymbolOutOfRange(c));
            }
            if delta[p][c].replace(q).is_some() {
                return Err(AutomatonError::DuplicateTransition { state: p, symbol: alphabet.name(c).to_string() });
            }
        }
        Ok(Self { alphabet, delta, initial, accepting: acc })
    }

    /// Builds an automaton from a full table, `delta[state][symbol]`.
    pub fn from_table(
        alphabet: Alphabet,
        delta: Vec<Vec<Option<StateId>>>,
        initial: StateId,
        accepting: Vec<bool>,
    ) -> Result<Self, AutomatonError> {
        let n = delta.len();
        if n == 0 {
            return Err(AutomatonError::NoStates);
        }
        if accepting.len() != n {
            return Err(AutomatonError::InvalidState { state: accepting.len(), count: n });
        }
        if initial >= n {
            return Err(AutomatonError::InvalidState { state: initial, count: n });
        }
        for row in &delta {
            if row.len() != alphabet.len() {
                return Err(AutomatonError::SymbolOutOfRange(row.len()));
            }
            if let Some(&q) = row.iter().flatten().find(|&&q| q >= n) {
                return Err(AutomatonError::InvalidState { state: q, count: n });
            }
        }
        Ok(Self { alphabet, delta, initial, accepting })
    }

    /// One rejecting state and no transitions.
    pub fn empty(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Self { alphabet, delta: vec![vec![None; k]], initial: 0, accepting: vec![false] }
    }

    /// One accepting state with a self-loop on every symbol.
    pub fn universal(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Self { alphabet, delta: vec![vec![Some(0); k]], initial: 0, accepting: vec![true] }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting.iter().enumerate().filter(|(_, &a)| a).map(|(q, _)| q)
    }

    pub fn next(&self, q: StateId, c: Symbol) -> Option<StateId> {
        self.delta[q][c]
    }

    /// All transitions as `(from, symbol, to)`, ordered by state then symbol.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        self.delta
            .iter()
            .enumerate()
            .flat_map(|(p, row)| row.iter().enumerate().filter_map(move |(c, q)| q.map(|q| (p, c, q))))
    }

    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(|row| row.iter().all(Option::is_some))
    }

    pub fn run_from(&self, start: StateId, word: &[Symbol]) -> Option<StateId> {
        word.iter().try_fold(start, |q, &c| self.delta[q].get(c).copied().flatten())
    }

    pub fn run(&self, word: &[Symbol]) -> Option<StateId> {
        self.run_from(self.initial, word)
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        self.run(word).is_some_and(|q| self.accepting[q])
    }

    /// Total version of this automaton: missing transitions go to a fresh
    /// rejecting sink. Already-total automata are returned unchanged.
    pub fn completed(&self) -> Dfa {
        if self.is_complete() {
            return self.clone();
        }
        let sink = self.num_states();
        let k = self.alphabet.len();
        let mut delta: Vec<Vec<Option<StateId>>> =
            self.delta.iter().map(|row| row.iter().map(|q| Some(q.unwrap_or(sink))).collect()).collect();
        delta.push(vec![Some(sink); k]);
        let mut accepting = self.accepting.clone();
        accepting.push(false);
        Dfa { alphabet: self.alphabet.clone(), delta, initial: self.initial, accepting }
    }

    /// Minimal complete automaton for the same language, with states numbered
    /// breadth-first from the initial state in alphabet order.
    pub fn minimized(&self) -> Dfa {
        let complete = self.completed().reachable_part();
        let n = complete.num_states();
        let k = complete.alphabet.len();

        // Moore refinement: split classes by (class, successor classes) until stable.
        let mut class: Vec<usize> = complete.accepting.iter().map(|&a| usize::from(a)).collect();
        let mut num_classes = 1 + usize::from(class.contains(&0) && class.contains(&1));
        if !class.contains(&0) {
            class.iter_mut().for_each(|c| *c = 0);
        }
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let next: Vec<usize> = (0..n)
                .map(|q| {
                    let mut sig = Vec::with_capacity(k + 1);
                    sig.push(class[q]);
                    sig.extend(complete.delta[q].iter().map(|t| class[t.expect("complete")]));
                    let fresh = ids.len();
                    *ids.entry(sig).or_insert(fresh)
                })
                .collect();
            let count = ids.len();
            class = next;
            if count == num_classes {
                break;
            }
            num_classes = count;
        }

        let mut representative = vec![usize::MAX; num_classes];
        for q in 0..n {
            if representative[class[q]] == usize::MAX {
                representative[class[q]] = q;
            }
        }
        let quotient = Dfa {
            alphabet: complete.alphabet.clone(),
            delta: representative
                .iter()
                .map(|&q| complete.delta[q].iter().map(|t| t.map(|r| class[r])).collect())
                .collect(),
            initial: class[complete.initial],
            accepting: representative.iter().map(|&q| complete.accepting[q]).collect(),
        };
        quotient.canonical()
    }

    /// Restriction to states reachable from the initial state, renumbered
    /// breadth-first.
    fn reachable_part(&self) -> Dfa {
        self.canonical()
    }

    /// Breadth-first renumbering from the initial state; unreachable states
    /// are dropped.
    fn canonical(&self) -> Dfa {
        let mut order = vec![usize::MAX; self.num_states()];
        let mut queue = VecDeque::from([self.initial]);
        let mut states = Vec::new();
        order[self.initial] = 0;
        while let Some(q) = queue.pop_front() {
            states.push(q);
            for r in self.delta[q].iter().flatten() {
                if order[*r] == usize::MAX {
                    order[*r] = states.len() + queue.len();
                    queue.push_back(*r);
                }
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            delta: states.iter().map(|&q| self.delta[q].iter().map(|t| t.map(|r| order[r])).collect()).collect(),
            initial: 0,
            accepting: states.iter().map(|&q| self.accepting[q]).collect(),
        }
    }

    fn check_alphabet(&self, other: &Dfa) -> Result<(), AutomatonError> {
        if self.alphabet != other.alphabet {
            return Err(AutomatonError::AlphabetMismatch(self.alphabet.to_string(), other.alphabet.to_string()));
        }
        Ok(())
    }

    /// Reachable product automaton. Missing transitions count as a dead
    /// component, so union does not require complete inputs.
    pub fn product(&self, other: &Dfa, mode: ProductMode) -> Result<Dfa, AutomatonError> {
        self.check_alphabet(other)?;
        type Pair = (Option<StateId>, Option<StateId>);
        let start: Pair = (Some(self.initial), Some(other.initial));
        let mut index: HashMap<Pair, StateId> = HashMap::from([(start, 0)]);
        let mut pairs = vec![start];
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            let row = self
                .alphabet
                .iter()
                .map(|c| {
                    let next: Pair = (p.and_then(|p| self.next(p, c)), q.and_then(|q| other.next(q, c)));
                    let alive = match mode {
                        ProductMode::Intersection => next.0.is_some() && next.1.is_some(),
                        ProductMode::Union => next.0.is_some() || next.1.is_some(),
                    };
                    alive.then(|| {
                        *index.entry(next).or_insert_with(|| {
                            pairs.push(next);
                            pairs.len() - 1
                        })
                    })
                })
                .collect();
            delta.push(row);
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| {
                let a = p.is_some_and(|p| self.accepting[p]);
                let b = q.is_some_and(|q| other.accepting[q]);
                match mode {
                    ProductMode::Intersection => a && b,
                    ProductMode::Union => a || b,
                }
            })
            .collect();
        Ok(Dfa { alphabet: self.alphabet.clone(), delta, initial: 0, accepting })
    }

    /// Language equality, decided by comparing canonical minimal automata.
    pub fn language_eq(&self, other: &Dfa) -> Result<bool, AutomatonError> {
        self.check_alphabet(other)?;
        Ok(self.minimized() == other.minimized())
    }

    /// Language inclusion `L(self) ⊆ L(other)`.
    pub fn is_subset_of(&self, other: &Dfa) -> Result<bool, AutomatonError> {
        let meet = self.product(other, ProductMode::Intersection)?;
        meet.language_eq(self)
    }

    /// Complement with respect to all words over the alphabet.
    pub fn complement(&self) -> Dfa {
        let mut d = self.completed();
        d.accepting.iter_mut().for_each(|a| *a = !*a);
        d
    }

    /// `can_finish[t][q]`: some word of length exactly `t` leads from `q` to acceptance.
    fn finishing_table(&self, n: usize) -> Vec<Vec<bool>> {
        let mut table = vec![self.accepting.clone()];
        for t in 1..=n {
            let prev = &table[t - 1];
            let row = self.delta.iter().map(|r| r.iter().flatten().any(|&q| prev[q])).collect();
            table.push(row);
        }
        table
    }

    /// The accepted words of length exactly `n`, as a trie.
    pub fn enumerate(&self, n: usize) -> FiniteLanguage {
        let mut out = FiniteLanguage::new(self.alphabet.clone());
        let table = self.finishing_table(n);
        if !table[n][self.initial] {
            return out;
        }
        let mut word = Vec::with_capacity(n);
        self.enumerate_into(self.initial, n, &table, &mut word, &mut out);
        out
    }

    fn enumerate_into(
        &self,
        q: StateId,
        remaining: usize,
        table: &[Vec<bool>],
        word: &mut Vec<Symbol>,
        out: &mut FiniteLanguage,
    ) {
        if remaining == 0 {
            out.insert(word);
            return;
        }
        for c in self.alphabet.iter() {
            if let Some(r) = self.delta[q][c] {
                if table[remaining - 1][r] {
                    word.push(c);
                    self.enumerate_into(r, remaining - 1, table, word, out);
                    word.pop();
                }
            }
        }
    }

    /// Number of accepted words of length `n`, by exact transfer-matrix iteration.
    pub fn count_words(&self, n: usize) -> BigUint {
        self.count_words_up_to(n).pop().expect("n + 1 entries")
    }

    /// Entry `i` is the number of accepted words of length `i`, for `i` in `0..=n`.
    pub fn count_words_up_to(&self, n: usize) -> Vec<BigUint> {
        let mut counts = vec![BigUint::zero(); self.num_states()];
        counts[self.initial] = BigUint::one();
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..=n {
            out.push(self.accepting_states().map(|q| &counts[q]).sum());
            if i == n {
                break;
            }
            let mut next = vec![BigUint::zero(); self.num_states()];
            for (p, row) in self.delta.iter().enumerate() {
                if counts[p].is_zero() {
                    continue;
                }
                for &q in row.iter().flatten() {
                    next[q] += &counts[p];
                }
            }
            counts = next;
        }
        out
    }

    /// States that are reachable from the initial state and can reach acceptance.
    pub fn useful_states(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut reach = vec![false; n];
        let mut stack = vec![self.initial];
        reach[self.initial] = true;
        while let Some(q) = stack.pop() {
            for &r in self.delta[q].iter().flatten() {
                if !reach[r] {
                    reach[r] = true;
                    stack.push(r);
                }
            }
        }
        let mut preds = vec![Vec::new(); n];
        for (p, _, q) in self.transitions() {
            preds[q].push(p);
        }
        let mut coreach = self.accepting.clone();
        let mut stack: Vec<StateId> = self.accepting_states().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !coreach[p] {
                    coreach[p] = true;
                    stack.push(p);
                }
            }
        }
        reach.iter().zip(&coreach).map(|(a, b)| *a && *b).collect()
    }

    /// Restriction to the states that lie on bi-infinite paths.
    pub fn trim_essential(&self) -> EssentialGraph {
        EssentialGraph::from_dfa(self)
    }

    /// Minimal automaton for the set of all factors of accepted words.
    pub fn factor_closure(&self) -> Dfa {
        let useful = self.useful_states();
        let mut nfa = Nfa::from_dfa(self);
        nfa.retain_states(&useful);
        for q in 0..nfa.num_states() {
            nfa.set_initial(q);
            nfa.set_accepting(q, true);
        }
        nfa.determinize().minimized()
    }

    /// Nondeterministic automaton for the reversed language.
    pub fn reversed(&self) -> Nfa {
        let mut nfa = Nfa::new(self.alphabet.clone(), self.num_states());
        for (p, c, q) in self.transitions() {
            nfa.add_transition(q, c, p);
        }
        for q in self.accepting_states() {
            nfa.set_initial(q);
        }
        nfa.set_accepting(self.initial, true);
        nfa
    }

    /// Adjacency matrix: entry `[p][q]` counts the symbols labelling `p -> q`.
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.num_states();
        let mut m = vec![vec![0u64; n]; n];
        for (p, _, q) in self.transitions() {
            m[p][q] += 1;
        }
        m
    }
}
