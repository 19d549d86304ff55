use std::collections::BTreeSet;

use super::ZooError;
use crate::automata::{Alphabet, AutomatonError, FiniteLanguage, Symbol, Word};

/// A substitution `τ` with nonempty images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Substitution {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self, ZooError> {
        if images.len() != alphabet.len() {
            return Err(ZooError::InvalidParameter(format!(
                "expected {} images, got {}",
                alphabet.len(),
                images.len()
            )));
        }
        if images.iter().any(Vec::is_empty) {
            return Err(ZooError::InvalidParameter("substitution images must be nonempty".into()));
        }
        if let Some(&c) = images.iter().flatten().find(|&&c| c >= alphabet.len()) {
            return Err(AutomatonError::SymbolOutOfRange(c).into());
        }
        Ok(Self { alphabet, images })
    }

    /// Parses images written as `0->01, 1->0`.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self, ZooError> {
        let mut images: Vec<Option<Word>> = vec![None; alphabet.len()];
        for rule in text.split(',') {
            let (lhs, rhs) = rule
                .split_once("->")
                .ok_or_else(|| ZooError::InvalidParameter(format!("rule `{}` lacks `->`", rule.trim())))?;
            let lhs = lhs.trim();
            let c = alphabet.index(lhs).ok_or_else(|| AutomatonError::UnknownSymbol(lhs.to_string()))?;
            images[c] = Some(alphabet.parse_word(rhs)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(c, w)| w.ok_or_else(|| ZooError::InvalidParameter(format!("no image for `{}`", alphabet.name(c)))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(alphabet, images)
    }

    /// `0 -> 01, 1 -> 0`.
    pub fn fibonacci() -> Self {
        Self::new(Alphabet::binary(), vec![vec![0, 1], vec![0]]).expect("valid images")
    }

    /// `0 -> 01, 1 -> 10`.
    pub fn thue_morse() -> Self {
        Self::new(Alphabet::binary(), vec![vec![0, 1], vec![1, 0]]).expect("valid images")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, c: Symbol) -> &[Symbol] {
        &self.images[c]
    }

    pub fn apply(&self, word: &[Symbol]) -> Word {
        word.iter().flat_map(|&c| self.images[c].iter().copied()).collect()
    }

    pub fn is_uniform(&self) -> bool {
        self.images.iter().all(|w| w.len() == self.images[0].len())
    }

    /// `reach[c][d]`: `d` occurs in `τ^j(c)` for some `j ≥ 1`.
    fn occurrence_closure(&self) -> Vec<Vec<bool>> {
        let k = self.alphabet.len();
        let mut reach: Vec<Vec<bool>> = (0..k).map(|c| (0..k).map(|d| self.images[c].contains(&d)).collect()).collect();
        for m in 0..k {
            for c in 0..k {
                if reach[c][m] {
                    let via = reach[m].clone();
                    for (r, v) in reach[c].iter_mut().zip(via) {
                        *r |= v;
                    }
                }
            }
        }
        reach
    }

    /// Some iterate `τ^j(c)` is unboundedly long: a letter with an image of
    /// length at least 2 occurs in one of its own iterates.
    pub fn is_growing(&self) -> bool {
        let reach = self.occurrence_closure();
        (0..self.alphabet.len()).any(|c| reach[c][c] && self.images[c].len() >= 2)
    }

    /// Some power of the occurrence matrix is positive.
    pub fn is_primitive(&self) -> bool {
        let k = self.alphabet.len();
        let step: Vec<Vec<bool>> = (0..k).map(|c| (0..k).map(|d| self.images[c].contains(&d)).collect()).collect();
        let mut power = step.clone();
        for _ in 0..(k - 1) * (k - 1) + 1 {
            if power.iter().flatten().all(|&b| b) {
                return true;
            }
            power = (0..k).map(|c| (0..k).map(|d| (0..k).any(|m| power[c][m] && step[m][d])).collect()).collect();
        }
        false
    }
}

/// All factors of length at most `n` of the words `τ^j(c)`.
///
/// Computed as the least set containing the letters and closed under taking
/// short factors of images: a factor `u` of `τ^{j+1}(c)` lies inside `τ(v)`
/// for a factor `v` of `τ^j(c)` with `|v| ≤ |u|`.
pub fn substitution_factors_up_to(t: &Substitution, n: usize) -> Result<FiniteLanguage, ZooError> {
    if !t.is_growing() {
        return Err(ZooError::NonGrowing);
    }
    let mut seen: BTreeSet<Word> = t.alphabet.iter().map(|c| vec![c]).filter(|_| n >= 1).collect();
    let mut frontier: Vec<Word> = seen.iter().cloned().collect();
    while let Some(v) = frontier.pop() {
        let image = t.apply(&v);
        for len in 1..=n.min(image.len()) {
            for u in image.windows(len) {
                if seen.insert(u.to_vec()) {
                    frontier.push(u.to_vec());
                }
            }
        }
    }
    let mut lang = FiniteLanguage::from_words(t.alphabet.clone(), seen);
    lang.insert(&[]);
    Ok(lang)
}

/// The length-`n` factors of the substitution language.
pub fn substitution_factors(t: &Substitution, n: usize) -> Result<FiniteLanguage, ZooError> {
    Ok(substitution_factors_up_to(t, n)?.restrict_length(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(l: &FiniteLanguage) -> Vec<String> {
        l.words().iter().map(|w| l.alphabet().format_word(w)).collect()
    }

    /// Factors of one long iterate; for primitive substitutions every factor
    /// of length `n` shows up once the iterate is long enough.
    fn iterate_oracle(t: &Substitution, n: usize, steps: usize) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for c in t.alphabet().iter() {
            let mut w = vec![c];
            for _ in 0..steps {
                w = t.apply(&w);
                out.extend(w.windows(n).map(<[Symbol]>::to_vec));
            }
        }
        out
    }

    #[test]
    fn fibonacci_slices() {
        let f = Substitution::fibonacci();
        assert!(f.is_primitive() && f.is_growing() && !f.is_uniform());
        assert_eq!(words(&substitution_factors(&f, 3).unwrap()), ["001", "010", "100", "101"]);
        for n in 1..=10 {
            let l = substitution_factors(&f, n).unwrap();
            assert_eq!(l.len(), n + 1);
            assert_eq!(l.words().into_iter().collect::<BTreeSet<_>>(), iterate_oracle(&f, n, 20));
        }
    }

    #[test]
    fn thue_morse_slices() {
        let t = Substitution::thue_morse();
        assert!(t.is_uniform() && t.is_primitive());
        assert_eq!(words(&substitution_factors(&t, 2).unwrap()), ["00", "01", "10", "11"]);
        assert_eq!(substitution_factors(&t, 4).unwrap().len(), 10);
    }

    #[test]
    fn single_fixed_letter() {
        let t = Substitution::parse(Alphabet::binary(), "0->00, 1->1").unwrap();
        assert!(!t.is_primitive());
        assert_eq!(words(&substitution_factors(&t, 4).unwrap()), ["0000"]);
        let unary = Substitution::new(Alphabet::new(["0"]).unwrap(), vec![vec![0, 0]]).unwrap();
        assert_eq!(words(&substitution_factors(&unary, 3).unwrap()), ["000"]);
    }

    #[test]
    fn rejects_bad_substitutions() {
        let id = Substitution::parse(Alphabet::binary(), "0->1, 1->0").unwrap();
        assert_eq!(substitution_factors(&id, 3), Err(ZooError::NonGrowing));
        assert!(Substitution::new(Alphabet::binary(), vec![vec![0], vec![]]).is_err());
        assert!(Substitution::new(Alphabet::binary(), vec![vec![0], vec![2]]).is_err());
        assert!(Substitution::parse(Alphabet::binary(), "0->01").is_err());
        // grows polynomially through 0 -> 01 with 1 fixed
        assert!(Substitution::parse(Alphabet::binary(), "0->01, 1->1").unwrap().is_growing());
    }
}
