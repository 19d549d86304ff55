use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::EntropyError;
use crate::automata::Dfa;
use crate::langgames::Player;

/// `log2 x`, accurate for integers far beyond the `f64` range.
pub fn log2_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().expect("fits in 64 bits").to_f64().unwrap_or(0.0).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 leading bits");
    (top as f64).log2() + shift as f64
}

#[derive(Clone, Debug, PartialEq)]
pub struct WordCountEntropy {
    pub n: usize,
    pub count: BigUint,
    /// `log2(count) / n`.
    pub h: f64,
}

/// The finite-length entropy estimates `log2 |L ∩ S^n| / n` for `n` in `1..=n_max`.
pub fn entropy_word_count(d: &Dfa, n_max: usize) -> Result<Vec<WordCountEntropy>, EntropyError> {
    if n_max == 0 {
        return Err(EntropyError::InvalidArgument("n_max must be at least 1".into()));
    }
    let counts = d.count_words_up_to(n_max);
    (1..=n_max)
        .map(|n| {
            let count = counts[n].clone();
            if count.is_zero() {
                return Err(EntropyError::EmptyLanguage(n));
            }
            let h = log2_biguint(&count) / n as f64;
            Ok(WordCountEntropy { n, count, h })
        })
        .collect()
}

/// Maximum number of `B`s in accepted words of each length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityProfile {
    /// Entry `n` is `None` when no word of length `n` is accepted.
    pub max_counts: Vec<Option<usize>>,
}

impl DensityProfile {
    pub fn max_count(&self, n: usize) -> Option<usize> {
        self.max_counts.get(n).copied().flatten()
    }

    pub fn density(&self, n: usize) -> Option<f64> {
        match n {
            0 => None,
            _ => self.max_count(n).map(|c| c as f64 / n as f64),
        }
    }
}

/// Max-plus path weights over `(state, length)`, with weight 1 on `B`-edges.
pub fn max_b_density(d: &Dfa, n_max: usize) -> Result<DensityProfile, EntropyError> {
    if !d.alphabet().is_players() {
        return Err(EntropyError::NotPlayerAlphabet(d.alphabet().to_string()));
    }
    let b = Player::B.symbol();
    let mut best: Vec<Option<usize>> = vec![None; d.num_states()];
    best[d.initial()] = Some(0);
    let mut max_counts = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        max_counts.push(d.accepting_states().filter_map(|q| best[q]).max());
        if n == n_max {
            break;
        }
        let mut next: Vec<Option<usize>> = vec![None; d.num_states()];
        for (p, c, q) in d.transitions() {
            if let Some(w) = best[p] {
                let w = w + usize::from(c == b);
                next[q] = Some(next[q].map_or(w, |old| old.max(w)));
            }
        }
        best = next;
    }
    Ok(DensityProfile { max_counts })
}

#[derive(Clone, Debug, PartialEq)]
pub struct LowerBoundRow {
    pub n: usize,
    pub count: BigUint,
    pub max_b: Option<usize>,
    /// `|S|^max_b`, the number of plays forced into `B_n(X)` by a winning order.
    pub required: BigUint,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LowerBoundReport {
    pub rows: Vec<LowerBoundRow>,
}

impl LowerBoundReport {
    pub fn violations(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.holds).map(|r| r.n).collect()
    }

    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

/// Checks `|B_n(X)| ≥ |S|^{max |a|_B}` over `a ∈ B_n(W)` exactly, for
/// `n` in `1..=n_max`. `d_w` should present the winning language of `d_x`.
pub fn lower_bound_check(d_x: &Dfa, d_w: &Dfa, n_max: usize) -> Result<LowerBoundReport, EntropyError> {
    let profile = max_b_density(d_w, n_max)?;
    let counts = d_x.count_words_up_to(n_max);
    let k = BigUint::from(d_x.alphabet().len());
    let rows = (1..=n_max)
        .map(|n| {
            let max_b = profile.max_count(n);
            let required = match max_b {
                Some(m) => k.pow(m as u32),
                None => BigUint::zero(),
            };
            let count = counts[n].clone();
            let holds = count >= required;
            LowerBoundRow { n, count, max_b, required, holds }
        })
        .collect();
    Ok(LowerBoundReport { rows })
}
