use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use super::{CountingOrder, GameError};
use crate::automata::{Alphabet, Dfa, FiniteLanguage, Symbol};

/// Orders are packed into `u128`, one letter or digit per position.
const MAX_ORDER_LENGTH: usize = 127;

/// Enumeration caps for the counting winning set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest allowed `n·log2|S|` for a length class of length `n`.
    pub max_log2_orders: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_log2_orders: 24 }
    }
}

/// Computes `W(L)` as a language over [`Alphabet::players`], one length
/// class at a time.
///
/// Each trie node at depth `d` gets the set of suffix orders of length
/// `n - d` that A wins from there; A-orders take the union of the children's
/// sets, B-orders the intersection over all symbols. Sets never exceed the
/// number of words below the node.
pub fn winning_set(lang: &FiniteLanguage) -> Result<FiniteLanguage, GameError> {
    let players = Alphabet::players();
    let mut out = FiniteLanguage::new(players);
    for n in lang.lengths() {
        if n > MAX_ORDER_LENGTH {
            return Err(GameError::OrderTooLong { length: n, max: MAX_ORDER_LENGTH });
        }
        for code in winning_orders(lang, 0, 0, n) {
            out.insert(&decode_binary(code, n));
        }
    }
    Ok(out)
}

fn winning_orders(lang: &FiniteLanguage, node: usize, depth: usize, n: usize) -> Vec<u128> {
    if depth == n {
        return if lang.is_terminal(node) { vec![0] } else { Vec::new() };
    }
    let m = n - depth - 1;
    let mut union: Vec<u128> = Vec::new();
    let mut inter: Option<Vec<u128>> = None;
    for c in lang.alphabet().iter() {
        let set = match lang.child(node, c) {
            Some(child) => winning_orders(lang, child, depth + 1, n),
            None => Vec::new(),
        };
        inter = Some(match inter {
            None => set.clone(),
            Some(prev) => prev.into_iter().filter(|s| set.binary_search(s).is_ok()).collect(),
        });
        union.extend(set);
    }
    union.sort_unstable();
    union.dedup();
    let b_bit = 1u128 << m;
    union.extend(inter.unwrap_or_default().into_iter().map(|s| b_bit | s));
    union
}

fn decode_binary(code: u128, n: usize) -> Vec<Symbol> {
    (0..n).map(|i| ((code >> (n - 1 - i)) & 1) as Symbol).collect()
}

/// Whether A wins the counting game on `lang` with announced set sizes
/// `order`. Words of other lengths are ignored.
///
/// A size `k` is winning at a node iff at least `k` of its children are
/// winning positions: A announces exactly those children.
pub fn counting_membership(lang: &FiniteLanguage, order: &CountingOrder) -> Result<bool, GameError> {
    order.check(lang.alphabet().len())?;
    Ok(counting_wins(lang, order.sizes(), 0, 0))
}

fn counting_wins(lang: &FiniteLanguage, sizes: &[usize], node: usize, depth: usize) -> bool {
    if depth == sizes.len() {
        return lang.is_terminal(node);
    }
    let winning = lang
        .alphabet()
        .iter()
        .filter_map(|c| lang.child(node, c))
        .filter(|&child| counting_wins(lang, sizes, child, depth + 1))
        .count();
    winning >= sizes[depth]
}

/// Computes the counting winning set `W̃(L)` as a language over the
/// alphabet `1 2 … |S|`.
pub fn counting_winning_set(lang: &FiniteLanguage, limits: Limits) -> Result<FiniteLanguage, GameError> {
    let k = lang.alphabet().len();
    let sizes = Alphabet::new((1..=k).map(|i| i.to_string())).expect("distinct numerals");
    let mut out = FiniteLanguage::new(sizes);
    let cap = f64::from(limits.max_log2_orders.min(MAX_ORDER_LENGTH as u32));
    for n in lang.lengths() {
        let log2_count = n as f64 * (k as f64).log2();
        if log2_count > cap {
            return Err(GameError::CapExceeded { length: n, alphabet: k, cap: limits.max_log2_orders });
        }
        for code in counting_orders(lang, 0, 0, n) {
            out.insert(&decode_base(code, n, k));
        }
    }
    Ok(out)
}

/// Suffix orders are encoded big-endian in base `|S|` with digit `size - 1`.
fn counting_orders(lang: &FiniteLanguage, node: usize, depth: usize, n: usize) -> Vec<u128> {
    if depth == n {
        return if lang.is_terminal(node) { vec![0] } else { Vec::new() };
    }
    let k = lang.alphabet().len() as u128;
    let place = k.pow((n - depth - 1) as u32);
    let mut rank: BTreeMap<u128, u128> = BTreeMap::new();
    for child in lang.alphabet().iter().filter_map(|c| lang.child(node, c)) {
        for s in counting_orders(lang, child, depth + 1, n) {
            *rank.entry(s).or_default() += 1;
        }
    }
    let mut out: Vec<u128> = rank.into_iter().flat_map(|(s, r)| (0..r).map(move |j| j * place + s)).collect();
    out.sort_unstable();
    out
}

fn decode_base(mut code: u128, n: usize, k: usize) -> Vec<Symbol> {
    let mut digits = vec![0; n];
    for slot in digits.iter_mut().rev() {
        *slot = (code % k as u128) as Symbol;
        code /= k as u128;
    }
    digits
}

/// Number of words `w` of length `n` with both `w0` and `w1` accepted.
pub fn right_special_count(d: &Dfa, n: usize) -> Result<BigUint, GameError> {
    if d.alphabet().len() != 2 {
        return Err(GameError::NotBinary(d.alphabet().len()));
    }
    let mut counts = vec![BigUint::zero(); d.num_states()];
    counts[d.initial()] = BigUint::from(1u32);
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); d.num_states()];
        for (p, _, q) in d.transitions() {
            if !counts[p].is_zero() {
                next[q] += &counts[p];
            }
        }
        counts = next;
    }
    let extends = |q, c| d.next(q, c).is_some_and(|r| d.is_accepting(r));
    Ok((0..d.num_states()).filter(|&q| extends(q, 0) && extends(q, 1)).map(|q| counts[q].clone()).sum())
}
