use super::{binomial_eps, entropy_spectral, EntropyError};
use crate::automata::Dfa;

/// Slack when testing the strict hypothesis `h(X) > log2(|S| - 1)`, so that
/// numerically equal entropies count as not satisfying it.
pub const HYPOTHESIS_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum UpperBoundReport {
    /// `h(X) ≤ log2(|S| - 1)` up to [`HYPOTHESIS_TOLERANCE`].
    NotApplicable {
        h_x: f64,
        threshold: f64,
    },
    Checked {
        h_x: f64,
        eps: f64,
        h_w: f64,
        holds: bool,
    },
}

impl UpperBoundReport {
    pub fn is_applicable(&self) -> bool {
        matches!(self, UpperBoundReport::Checked { .. })
    }

    /// False only for an applicable check that fails.
    pub fn holds(&self) -> bool {
        match self {
            UpperBoundReport::NotApplicable { .. } => true,
            UpperBoundReport::Checked { holds, .. } => *holds,
        }
    }
}

/// Checks `h(W(X)) ≥ ε` for the largest `ε` with
/// `(2e/ε)^ε ≤ 2^{h(X)} / (|S| - 1)`, given `h_w = h(W(X))`.
pub fn upper_bound_check(d_x: &Dfa, h_w: f64) -> UpperBoundReport {
    let h_x = entropy_spectral(d_x).entropy_bits;
    let others = (d_x.alphabet().len() - 1) as f64;
    let threshold = others.log2();
    if h_x <= threshold + HYPOTHESIS_TOLERANCE {
        return UpperBoundReport::NotApplicable { h_x, threshold };
    }
    let c = h_x.exp2() / others;
    let eps = binomial_eps(c).unwrap_or(1.0);
    UpperBoundReport::Checked { h_x, eps, h_w, holds: h_w >= eps - HYPOTHESIS_TOLERANCE }
}

/// The lower bound on `h(X)` implied by `h(W(X)) = h_w` over an alphabet of
/// size `alphabet`: `ε·log2|S|` for the largest `ε` with `(2e/ε)^ε ≤ 2^{h_w}`.
pub fn entropy_lower_bound(h_w: f64, alphabet: usize) -> f64 {
    let full = (alphabet as f64).log2();
    if h_w >= 1.0 {
        return full;
    }
    match binomial_eps(h_w.exp2()) {
        Ok(eps) => eps * full,
        Err(_) => 0.0,
    }
}

/// Prefix table of `ln n!`.
#[derive(Clone, Debug)]
pub struct LnFactorials(Vec<f64>);

impl LnFactorials {
    pub fn new(n_max: usize) -> Self {
        let mut table = Vec::with_capacity(n_max + 1);
        table.push(0.0);
        for n in 1..=n_max {
            table.push(table[n - 1] + (n as f64).ln());
        }
        Self(table)
    }

    pub fn n_max(&self) -> usize {
        self.0.len() - 1
    }

    pub fn ln_factorial(&self, n: usize) -> f64 {
        self.0[n]
    }

    pub fn ln_binomial(&self, n: usize, m: usize) -> Result<f64, EntropyError> {
        if m > n || n > self.n_max() {
            return Err(EntropyError::InvalidArgument(format!("binomial({n}, {m}) outside the table")));
        }
        Ok(self.0[n] - self.0[m] - self.0[n - m])
    }

    /// The largest `n ≤ n_max` with `C(n, ⌊εn⌋) > k^n`, if any.
    pub fn last_threshold_failure(&self, eps: f64, k: f64) -> Option<usize> {
        let ln_k = k.ln();
        (1..=self.n_max()).rev().find(|&n| {
            let m = (eps * n as f64).floor() as usize;
            self.0[n] - self.0[m] - self.0[n - m] > n as f64 * ln_k + 1e-9
        })
    }
}
