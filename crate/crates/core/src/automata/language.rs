use std::collections::{BTreeMap, BTreeSet};

use super::{Alphabet, Dfa, Symbol, Word};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct TrieNode {
    children: BTreeMap<Symbol, usize>,
    terminal: bool,
}

/// A finite set of words stored as a prefix tree.
///
/// Node `0` is the root (the empty prefix). Words of different lengths may
/// be mixed.
#[derive(Clone, Debug)]
pub struct FiniteLanguage {
    alphabet: Alphabet,
    nodes: Vec<TrieNode>,
    len: usize,
}

impl PartialEq for FiniteLanguage {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.len == other.len && self.words() == other.words()
    }
}

impl Eq for FiniteLanguage {}

impl FiniteLanguage {
    pub fn new(alphabet: Alphabet) -> Self {
        Self { alphabet, nodes: vec![TrieNode::default()], len: 0 }
    }

    pub fn from_words<I, W>(alphabet: Alphabet, words: I) -> Self
    where
        I: IntoIterator<Item = W>,
        W: AsRef<[Symbol]>,
    {
        let mut lang = Self::new(alphabet);
        for w in words {
            lang.insert(w.as_ref());
        }
        lang
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Adds a word; returns false if it was already present.
    ///
    /// # Panics
    /// If the word uses a symbol outside the alphabet.
    pub fn insert(&mut self, word: &[Symbol]) -> bool {
        let mut node = 0;
        for &c in word {
            assert!(c < self.alphabet.len(), "symbol {c} outside alphabet");
            node = match self.nodes[node].children.get(&c) {
                Some(&child) => child,
                None => {
                    self.nodes.push(TrieNode::default());
                    let child = self.nodes.len() - 1;
                    self.nodes[node].children.insert(c, child);
                    child
                }
            };
        }
        let fresh = !self.nodes[node].terminal;
        self.nodes[node].terminal = true;
        self.len += usize::from(fresh);
        fresh
    }

    pub fn contains(&self, word: &[Symbol]) -> bool {
        self.walk(word).is_some_and(|n| self.nodes[n].terminal)
    }

    /// Trie node reached by reading `prefix` from the root.
    pub(crate) fn walk(&self, prefix: &[Symbol]) -> Option<usize> {
        prefix.iter().try_fold(0, |n, c| self.child(n, *c))
    }

    pub(crate) fn child(&self, node: usize, c: Symbol) -> Option<usize> {
        self.nodes[node].children.get(&c).copied()
    }

    pub(crate) fn is_terminal(&self, node: usize) -> bool {
        self.nodes[node].terminal
    }

    pub(crate) fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// All words, shortest first and lexicographic within a length.
    pub fn words(&self) -> Vec<Word> {
        let mut out = Vec::with_capacity(self.len);
        let mut prefix = Vec::new();
        self.collect(0, &mut prefix, &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn collect(&self, node: usize, prefix: &mut Word, out: &mut Vec<Word>) {
        if self.nodes[node].terminal {
            out.push(prefix.clone());
        }
        for (&c, &child) in &self.nodes[node].children {
            prefix.push(c);
            self.collect(child, prefix, out);
            prefix.pop();
        }
    }

    /// Distinct word lengths present.
    pub fn lengths(&self) -> BTreeSet<usize> {
        self.words().iter().map(Vec::len).collect()
    }

    /// The sublanguage of words of length `n`.
    pub fn restrict_length(&self, n: usize) -> FiniteLanguage {
        Self::from_words(self.alphabet.clone(), self.words().into_iter().filter(|w| w.len() == n))
    }

    pub fn is_subset_of(&self, other: &FiniteLanguage) -> bool {
        self.words().iter().all(|w| other.contains(w))
    }

    /// The trie read as a partial automaton.
    pub fn to_dfa(&self) -> Dfa {
        let transitions =
            self.nodes.iter().enumerate().flat_map(|(p, node)| node.children.iter().map(move |(&c, &q)| (p, c, q)));
        let accepting = (0..self.nodes.len()).filter(|&n| self.nodes[n].terminal);
        Dfa::new(self.alphabet.clone(), self.nodes.len(), 0, accepting, transitions)
            .expect("trie is a well-formed automaton")
    }
}
