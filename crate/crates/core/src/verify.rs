//! Randomized and exhaustive property suites, runnable from the CLI.
//!
//! Each suite returns a [`SuiteReport`] with one line per check group and
//! pass/fail counts.

use std::f64::consts::E;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::automata::{Alphabet, Dfa, FiniteLanguage, ProductMode, RegexExpr, Word};
use crate::entropy::{
    entropy_spectral, entropy_word_count, gap_root, lower_bound_check, upper_bound_check, LnFactorials,
};
use crate::langgames::{
    counting_membership, counting_winning_set, right_special_count, winning_set, CountingOrder, Limits, TurnOrder,
};
use crate::winshift::{is_downward_closed, two_directional_winning_shift, winning_language_dfa};
use crate::zoo::{
    catalog, counting_projection, extend, named_shift, shift_product, substitution_factors, substitution_factors_up_to,
    ShiftParams, Substitution,
};

pub const SUITES: &[&str] = &["binary-cardinality", "counting", "oracle", "structure", "sturmian", "bounds", "entropy"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Overrides the suite's default maximal length.
    pub nmax: Option<usize>,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { nmax: None, samples: 1000, seed: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub lines: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self { name, passed: 0, failed: 0, lines: Vec::new() }
    }

    /// Records a group of checks and its summary line.
    fn group(&mut self, passed: usize, failed: usize, line: String) {
        self.passed += passed;
        self.failed += failed;
        self.lines.push(line);
    }

    fn single(&mut self, ok: bool, what: &str) {
        self.group(usize::from(ok), usize::from(!ok), format!("{what}: {}", if ok { "ok" } else { "FAILED" }));
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn summary(&self) -> String {
        format!("suite {}: passed={} failed={}", self.name, self.passed, self.failed)
    }
}

/// Runs the suite called `name`, or `None` if there is no such suite.
pub fn run_suite(name: &str, config: VerifyConfig) -> Option<SuiteReport> {
    Some(match name {
        "binary-cardinality" => binary_cardinality(config),
        "counting" => counting(config),
        "oracle" => oracle(config),
        "structure" => structure(config),
        "sturmian" => sturmian(config),
        "bounds" => bounds(config),
        "entropy" => entropy(config),
        _ => return None,
    })
}

fn all_words(k: usize, n: usize) -> Vec<Word> {
    Dfa::universal(Alphabet::digits(k - 1)).enumerate(n).words()
}

fn random_language(rng: &mut StdRng, k: usize, n: usize) -> FiniteLanguage {
    let density: f64 = rng.gen();
    let words = all_words(k, n).into_iter().filter(|_| rng.gen_bool(density));
    FiniteLanguage::from_words(Alphabet::digits(k - 1), words)
}

fn b_count(order: &[usize]) -> usize {
    order.iter().filter(|&&c| c == 1).count()
}

/// `|W(L)| = |L|` for binary `L`: exhaustive up to length 4, sampled beyond.
pub fn binary_cardinality(config: VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("binary-cardinality");
    let mut rng = StdRng::seed_from_u64(config.seed);
    for n in 1..=config.nmax.unwrap_or(4) {
        let languages: Vec<FiniteLanguage> = if n <= 4 {
            let words = all_words(2, n);
            (0..1u64 << words.len())
                .map(|mask| {
                    let chosen = words.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1);
                    FiniteLanguage::from_words(Alphabet::binary(), chosen.map(|(_, w)| w.clone()))
                })
                .collect()
        } else {
            (0..config.samples).map(|_| random_language(&mut rng, 2, n)).collect()
        };
        let failures = languages.iter().filter(|l| winning_set(l).map(|w| w.len()) != Ok(l.len())).count();
        let kind = if n <= 4 { "languages checked" } else { "sampled languages checked" };
        report.group(
            languages.len() - failures,
            failures,
            format!("{} {kind} at n={n}, {failures} failures", languages.len()),
        );
    }
    report
}

/// Counting winning sets: size, the identity `W(W̃(L)) = W(L)` and the
/// binary case agreeing with ordinary winning sets.
pub fn counting(config: VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("counting");
    let mut rng = StdRng::seed_from_u64(config.seed);
    let nmax = config.nmax.unwrap_or(4);
    let mut failures = 0;
    for _ in 0..config.samples {
        let n = rng.gen_range(1..=nmax);
        let l = random_language(&mut rng, 3, n);
        let ok = counting_winning_set(&l, Limits::default())
            .is_ok_and(|c| c.len() == l.len() && winning_set(&c).ok() == winning_set(&l).ok());
        failures += usize::from(!ok);
    }
    report.group(
        config.samples - failures,
        failures,
        format!("{} ternary languages checked at n≤{nmax}, {failures} failures", config.samples),
    );

    let mut checked = 0;
    let mut failures = 0;
    for n in 1..=nmax.min(4) {
        let words = all_words(2, n);
        for mask in 0..1u64 << words.len() {
            let l = FiniteLanguage::from_words(
                Alphabet::binary(),
                words.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, w)| w.clone()),
            );
            let w = winning_set(&l).expect("short orders");
            let c = counting_winning_set(&l, Limits::default()).expect("small cap");
            let mut ok = w.words() == c.words();
            if mask % 97 == 0 {
                for order in all_words(2, n) {
                    let t = TurnOrder::from_word(&order).expect("binary order");
                    let member = counting_membership(&l, &CountingOrder::from_turn_order(&t));
                    ok &= member == Ok(w.contains(&order));
                }
            }
            checked += 1;
            failures += usize::from(!ok);
        }
    }
    report.group(
        checked - failures,
        failures,
        format!("{checked} binary languages checked at n≤{}, {failures} failures", nmax.min(4)),
    );
    report
}

/// Automaton-derived slices of `W` against brute-force winning sets.
pub fn oracle(config: VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("oracle");
    let nmax = config.nmax.unwrap_or(10);
    for (label, d) in catalog() {
        let w = match winning_language_dfa(&d) {
            Ok(w) => w,
            Err(e) => {
                report.group(0, 1, format!("{label}: {e}"));
                continue;
            }
        };
        let mismatches = (0..=nmax).filter(|&n| winning_set(&d.enumerate(n)).ok() != Some(w.enumerate(n))).count();
        report.group(nmax + 1 - mismatches, mismatches, format!("{label}: n≤{nmax}, {mismatches} mismatches"));
    }
    report
}

/// Factor-closed language of all words of length at most `n` of `d`.
fn slices_up_to(d: &Dfa, n: usize) -> FiniteLanguage {
    let mut l = FiniteLanguage::new(d.alphabet().clone());
    for i in 0..=n {
        for w in d.enumerate(i).words() {
            l.insert(&w);
        }
    }
    l
}

fn players(expr: &str) -> Dfa {
    let ab = Alphabet::players();
    RegexExpr::parse(&ab, expr).expect("valid expression").to_dfa(&ab)
}

/// Structural laws of winning sets and winning shifts.
pub fn structure(config: VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("structure");
    let mut rng = StdRng::seed_from_u64(config.seed);
    let nmax = config.nmax.unwrap_or(5);
    let samples = config.samples.min(500);

    let (mut down_fail, mut mono_fail, mut size_fail) = (0, 0, 0);
    for _ in 0..samples {
        let k = rng.gen_range(2..=3);
        let n = rng.gen_range(1..=nmax);
        let l = random_language(&mut rng, k, n);
        let w = winning_set(&l).expect("short orders");
        let lowered_ok = w.words().iter().all(|a| {
            (0..a.len()).filter(|&i| a[i] == 1).all(|i| {
                let mut b = a.clone();
                b[i] = 0;
                w.contains(&b)
            })
        });
        down_fail += usize::from(!lowered_ok);
        let mut bigger = l.clone();
        for word in all_words(k, n) {
            if rng.gen_bool(0.3) {
                bigger.insert(&word);
            }
        }
        mono_fail += usize::from(!w.is_subset_of(&winning_set(&bigger).expect("short orders")));
        size_fail += usize::from(w.len() > l.len());
    }
    report.group(
        samples - down_fail,
        down_fail,
        format!("downward closure: {samples} languages, {down_fail} failures"),
    );
    report.group(samples - mono_fail, mono_fail, format!("monotonicity: {samples} pairs, {mono_fail} failures"));
    report.group(samples - size_fail, size_fail, format!("|W(L)| ≤ |L|: {samples} languages, {size_fail} failures"));

    let depth = 7;
    for (label, d) in catalog() {
        let slices = slices_up_to(&d, depth);
        let w = winning_set(&slices).expect("short orders");
        let factor_closed =
            w.words().iter().all(|a| (0..=a.len()).all(|i| (i..=a.len()).all(|j| w.contains(&a[i..j]))));
        let right_ext = w
            .words()
            .iter()
            .filter(|a| a.len() < depth)
            .all(|a| [0, 1].iter().any(|&c| w.contains(&[a.as_slice(), &[c]].concat())));
        let wd = winning_language_dfa(&d);
        let down = wd.as_ref().map(|x| is_downward_closed(x) == Ok(true)).unwrap_or(false);
        let ok = factor_closed && right_ext && down;
        report.single(ok, &format!("{label}: factor-closed, right-extendable, downward closed"));
    }

    let binary: Vec<(&str, Dfa)> =
        [("goldenmean", 1, 1), ("zeroone", 1, 1), ("even", 1, 1), ("periodic", 1, 3), ("gap", 2, 1)]
            .iter()
            .map(|&(name, m, p)| {
                (name, named_shift(name, ShiftParams { m, p, ..ShiftParams::default() }).expect("known shift"))
            })
            .collect();
    for (i, (nx, x)) in binary.iter().enumerate() {
        for (ny, y) in &binary[i..] {
            let lhs = shift_product(x, y).ok().and_then(|p| winning_language_dfa(&p).ok());
            let rhs = winning_language_dfa(x)
                .and_then(|a| winning_language_dfa(y).map(|b| (a, b)))
                .ok()
                .and_then(|(a, b)| a.product(&b, ProductMode::Intersection).ok());
            let ok = matches!((lhs, rhs), (Some(l), Some(r)) if l.language_eq(&r) == Ok(true));
            report.single(ok, &format!("W({nx} × {ny}) = W({nx}) ∩ W({ny})"));
        }
    }

    for expr in ["A*", "A*(λ + B)A*", "(A + BA)*(λ + B)"] {
        let d = players(expr).factor_closure();
        let ok = winning_language_dfa(&d).is_ok_and(|w| w.language_eq(&d) == Ok(true));
        report.single(ok, &format!("fixed point W(X) = X for {expr}"));
    }

    for name in ["goldenmean", "full"] {
        let d = named_shift(name, ShiftParams::default()).expect("known shift");
        let wd = winning_language_dfa(&d).expect("complete presentation");
        for k in 1..=3 {
            let e = extend(&d, k).expect("binary input");
            let same_w = winning_language_dfa(&e).is_ok_and(|we| we.language_eq(&wd) == Ok(true));
            let back = counting_projection(&e).language_eq(&d) == Ok(true);
            report.single(same_w && back, &format!("W(E_{k}({name})) = W({name}), projection recovers {name}"));
        }
    }

    let p1 = named_shift("periodic", ShiftParams::default()).expect("known shift");
    let ok = winning_language_dfa(&p1).is_ok_and(|w| w.language_eq(&players("A*")) == Ok(true));
    report.single(ok, "one-letter shift has W = A*");
    let p3 = named_shift("periodic", ShiftParams { p: 3, ..ShiftParams::default() }).expect("known shift");
    let ok = two_directional_winning_shift(&p3).is_ok_and(|w| w.language_eq(&players("A*")) == Ok(true));
    report.single(ok, "two-directional winning shift of periodic p=3 is A*");
    report
}

/// Fibonacci slices have winning sets `{a : |a|_B ≤ 1}` and one right-special word.
pub fn sturmian(config: VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("sturmian");
    let fib = Substitution::fibonacci();
    for n in 1..=config.nmax.unwrap_or(10) {
        let ok_w = substitution_factors(&fib, n).ok().and_then(|l| winning_set(&l).ok()).is_some_and(|w| {
            let expected: Vec<Word> = all_words(2, n).into_iter().filter(|a| b_count(a) <= 1).collect();
            w.words() == expected
        });
        let special =
            substitution_factors_up_to(&fib, n + 1).ok().and_then(|l| right_special_count(&l.to_dfa(), n).ok());
        let ok_rs = special == Some(1u32.into());
        report.single(ok_w && ok_rs, &format!("n={n}: W(B_n) = {{≤1 B}}, one right-special word"));
    }
    report
}

/// The finite-length entropy bounds and the binomial estimates behind them.
pub fn bounds(config: VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("bounds");
    let nmax = config.nmax.unwrap_or(12);
    for (label, d) in catalog() {
        let Ok(w) = winning_language_dfa(&d) else {
            report.group(0, 1, format!("{label}: winning language failed"));
            continue;
        };
        let lower = lower_bound_check(&d, &w, nmax).map(|r| r.violations());
        let h_x = entropy_spectral(&d).entropy_bits;
        let threshold = ((d.alphabet().len() - 1) as f64).log2();
        let upper = upper_bound_check(&d, entropy_spectral(&w).entropy_bits);
        let applicable_ok = upper.is_applicable() == (h_x > threshold + crate::entropy::HYPOTHESIS_TOLERANCE);
        let ok = lower.as_ref().is_ok_and(|v| v.is_empty()) && applicable_ok && upper.holds();
        let status = if upper.is_applicable() { "upper bound checked" } else { "upper bound not applicable" };
        report.single(ok, &format!("{label}: lower bound n≤{nmax}, {status}"));
    }

    let nr = named_shift("norepeat", ShiftParams { k: 2, ..ShiftParams::default() }).expect("known shift");
    let w = winning_language_dfa(&nr).expect("complete presentation");
    let sentinel = !upper_bound_check(&nr, entropy_spectral(&w).entropy_bits).is_applicable()
        && two_directional_winning_shift(&nr).is_ok_and(|t| t.language_eq(&players("A*")) == Ok(true));
    report.single(sentinel, "norepeat k=2: hypothesis fails and the two-directional winning shift is A*");

    let table = LnFactorials::new(10_000);
    let mut eq_fail = 0;
    let mut eq_checked = 0;
    for n in 1..=300usize {
        for m in 1..=n {
            let rhs = m as f64 * (n as f64 * E / m as f64).ln();
            eq_checked += 1;
            eq_fail += usize::from(table.ln_binomial(n, m).map_or(true, |l| l > rhs + 1e-9));
        }
    }
    report.group(eq_checked - eq_fail, eq_fail, format!("C(n,m) ≤ (ne/m)^m: {eq_checked} pairs, {eq_fail} failures"));
    for eps in [0.05, 0.1, 0.2, 0.3] {
        let base = (E / eps).powf(eps);
        let k = 0.5 * (base + 2.0);
        let last = table.last_threshold_failure(eps, k);
        let ok = last.is_none_or(|n| n < table.n_max() / 2);
        report.single(ok, &format!("C(n,⌊{eps}n⌋) ≤ {k:.4}^n for n in {}..=10000", last.map_or(1, |n| n + 1)));
    }
    report
}

/// Spectral entropies against word counts, closed forms and root finding.
pub fn entropy(config: VerifyConfig) -> SuiteReport {
    let mut report = SuiteReport::new("entropy");
    let n = config.nmax.unwrap_or(64);
    for (label, d) in catalog() {
        let spectral = entropy_spectral(&d).entropy_bits;
        let counts = entropy_word_count(&d, n);
        let envelope = ((d.num_states() as f64).log2() + (n as f64).log2()) / n as f64;
        let h_n = counts.map(|h| h[n - 1].h);
        let ok = h_n.as_ref().is_ok_and(|h| (h - spectral.max(0.0)).abs() <= envelope);
        report.single(ok, &format!("{label}: |h_{n} - h| within (log2|Q| + log2 n)/n"));
        // zero-entropy shifts have polynomial counts, so only the envelope applies
        if spectral > 0.0 && n >= 64 {
            let ok = h_n.is_ok_and(|h| (h - spectral).abs() <= 0.02);
            report.single(ok, &format!("{label}: |h_{n} - h| ≤ 0.02"));
        }
        if d.alphabet().len() == 2 {
            let ok = winning_language_dfa(&d)
                .is_ok_and(|w| (entropy_spectral(&w).entropy_bits - spectral).abs() < 1e-9 || spectral < 0.0);
            report.single(ok, &format!("{label}: h(W(X)) = h(X)"));
        }
    }
    for k in 1..=10 {
        let d = named_shift("goldext", ShiftParams { k, ..ShiftParams::default() }).expect("known shift");
        let closed = (0.5 + (0.25 + k as f64).sqrt()).log2();
        report
            .single((entropy_spectral(&d).entropy_bits - closed).abs() < 1e-9, &format!("goldext k={k}: closed form"));
    }
    for m in 1..=4 {
        for k in 1..=5 {
            let d = named_shift("gapext", ShiftParams { m, k, p: 1 }).expect("known shift");
            let ok = (entropy_spectral(&d).entropy_bits - gap_root(m as u32, k as u64).log2()).abs() < 1e-9;
            report.single(ok, &format!("gapext m={m} k={k}: log2 of the gap root"));
        }
    }
    report
}
