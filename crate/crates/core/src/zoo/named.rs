use super::{extend, sft_from_forbidden, ZooError};
use crate::automata::{Alphabet, Dfa, FiniteLanguage, RegexExpr};

pub const SHIFT_NAMES: &[&str] =
    &["even", "goldenmean", "zeroone", "soficY", "sftZ", "gap", "full", "periodic", "norepeat", "goldext", "gapext"];

/// Integer parameters of the parametrized shifts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftParams {
    /// Minimal gap between ones in `gap` and `gapext`.
    pub m: usize,
    /// Largest symbol for `full`, `norepeat`, `goldext` and `gapext`.
    pub k: usize,
    /// Period of `periodic`.
    pub p: usize,
}

impl Default for ShiftParams {
    fn default() -> Self {
        Self { m: 1, k: 1, p: 1 }
    }
}

/// Factor language of the two-sided shift whose points have all factors in
/// the language of `expr`.
pub fn shift_from_expression(alphabet: &Alphabet, expr: &str) -> Result<Dfa, ZooError> {
    let d = RegexExpr::parse(alphabet, expr)?.to_dfa(alphabet);
    Ok(d.factor_closure().trim_essential().factor_dfa())
}

/// The shift called `name`:
///
/// - `even`: the even shift, as the 4-state automaton with sink
/// - `goldenmean`: no `11`
/// - `zeroone`: no `10`, i.e. points of the form `0^∞1^∞`
/// - `soficY`: factors of `0*(10*20*)*`
/// - `sftZ`: factors of `(01 + 0001)*`
/// - `gap`: no `10^i1` for `i < m`
/// - `full`: all sequences over `0..=k`
/// - `periodic`: the orbit of `(0^{p-1}1)^∞`
/// - `norepeat`: no `ss` over `0..=k`
/// - `goldext`, `gapext`: the `k`-extensions of `goldenmean` and `gap`
pub fn named_shift(name: &str, params: ShiftParams) -> Result<Dfa, ZooError> {
    let binary = Alphabet::binary();
    let forbid = |words: Vec<Vec<usize>>, alphabet: &Alphabet| {
        sft_from_forbidden(alphabet, &FiniteLanguage::from_words(alphabet.clone(), words))
    };
    let gap = |m: usize| forbid((0..m).map(|i| [vec![1], vec![0; i], vec![1]].concat()).collect(), &binary);
    match name {
        "even" => {
            let t = [(0, 0, 0), (0, 1, 1), (1, 0, 2), (1, 1, 1), (2, 0, 1), (2, 1, 3), (3, 0, 3), (3, 1, 3)];
            Ok(Dfa::new(binary, 4, 0, [0, 1, 2], t)?)
        }
        "goldenmean" => Ok(gap(1)),
        "zeroone" => Ok(forbid(vec![vec![1, 0]], &binary)),
        "soficY" => shift_from_expression(&Alphabet::digits(2), "0*(10*20*)*"),
        "sftZ" => shift_from_expression(&binary, "(01 + 0001)*"),
        "gap" => Ok(gap(params.m)),
        "full" => Ok(Dfa::universal(Alphabet::digits(params.k))),
        "periodic" => {
            if params.p == 0 {
                return Err(ZooError::InvalidParameter("period must be at least 1".into()));
            }
            let block = format!("({}1)*", "0".repeat(params.p - 1));
            shift_from_expression(&binary, &block)
        }
        "norepeat" => {
            let s = Alphabet::digits(params.k);
            Ok(forbid(s.iter().map(|c| vec![c, c]).collect(), &s))
        }
        "goldext" => extend(&gap(1), params.k),
        "gapext" => extend(&gap(params.m), params.k),
        _ => Err(ZooError::UnknownShift(name.to_string())),
    }
}

/// Small instances of every named shift, labelled for reports.
pub fn catalog() -> Vec<(String, Dfa)> {
    let entries: &[(&str, ShiftParams)] = &[
        ("even", ShiftParams::default()),
        ("goldenmean", ShiftParams::default()),
        ("zeroone", ShiftParams::default()),
        ("soficY", ShiftParams::default()),
        ("sftZ", ShiftParams::default()),
        ("gap", ShiftParams { m: 2, ..ShiftParams::default() }),
        ("gap", ShiftParams { m: 3, ..ShiftParams::default() }),
        ("full", ShiftParams { k: 1, ..ShiftParams::default() }),
        ("full", ShiftParams { k: 2, ..ShiftParams::default() }),
        ("periodic", ShiftParams { p: 1, ..ShiftParams::default() }),
        ("periodic", ShiftParams { p: 3, ..ShiftParams::default() }),
        ("norepeat", ShiftParams { k: 2, ..ShiftParams::default() }),
        ("goldext", ShiftParams { k: 2, ..ShiftParams::default() }),
        ("gapext", ShiftParams { m: 2, k: 2, p: 1 }),
    ];
    entries
        .iter()
        .map(|&(name, params)| {
            let label = match name {
                "gap" => format!("gap m={}", params.m),
                "full" | "norepeat" | "goldext" => format!("{name} k={}", params.k),
                "periodic" => format!("periodic p={}", params.p),
                "gapext" => format!("gapext m={} k={}", params.m, params.k),
                _ => name.to_string(),
            };
            (label, named_shift(name, params).expect("catalog entries are valid"))
        })
        .collect()
}
