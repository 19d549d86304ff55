use super::{Alphabet, AutomatonError, Dfa, Nfa, StateId, Symbol};

/// Regular expressions used to write down expected languages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegexExpr {
    Epsilon,
    Literal(Symbol),
    Concat(Box<RegexExpr>, Box<RegexExpr>),
    Union(Box<RegexExpr>, Box<RegexExpr>),
    Star(Box<RegexExpr>),
    Plus(Box<RegexExpr>),
}

impl RegexExpr {
    pub fn concat(a: RegexExpr, b: RegexExpr) -> Self {
        Self::Concat(Box::new(a), Box::new(b))
    }

    pub fn union(a: RegexExpr, b: RegexExpr) -> Self {
        Self::Union(Box::new(a), Box::new(b))
    }

    pub fn star(a: RegexExpr) -> Self {
        Self::Star(Box::new(a))
    }

    pub fn plus(a: RegexExpr) -> Self {
        Self::Plus(Box::new(a))
    }

    /// Parses the notation `A*BB(A + AB)*`: juxtaposition is concatenation,
    /// `+` is union, postfix `*` is star and postfix `^+` is one-or-more.
    /// `λ` denotes the empty word. Symbols must be single characters.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self, AutomatonError> {
        if !alphabet.is_single_char() {
            return Err(AutomatonError::Regex("parser needs single-character symbols".into()));
        }
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser { alphabet, chars: &chars, pos: 0 };
        let expr = parser.union()?;
        if parser.pos != chars.len() {
            return Err(AutomatonError::Regex(format!("unexpected `{}` at {}", chars[parser.pos], parser.pos)));
        }
        Ok(expr)
    }

    /// Minimal complete automaton for the denoted language.
    pub fn to_dfa(&self, alphabet: &Alphabet) -> Dfa {
        let mut nfa = Nfa::new(alphabet.clone(), 0);
        let (start, end) = self.thompson(&mut nfa);
        nfa.set_initial(start);
        nfa.set_accepting(end, true);
        nfa.determinize().minimized()
    }

    fn thompson(&self, nfa: &mut Nfa) -> (StateId, StateId) {
        match self {
            RegexExpr::Epsilon => {
                let s = nfa.add_state();
                (s, s)
            }
            RegexExpr::Literal(c) => {
                let s = nfa.add_state();
                let e = nfa.add_state();
                nfa.add_transition(s, *c, e);
                (s, e)
            }
            RegexExpr::Concat(a, b) => {
                let (s1, e1) = a.thompson(nfa);
                let (s2, e2) = b.thompson(nfa);
                nfa.add_epsilon(e1, s2);
                (s1, e2)
            }
            RegexExpr::Union(a, b) => {
                let s = nfa.add_state();
                let e = nfa.add_state();
                for part in [a, b] {
                    let (ps, pe) = part.thompson(nfa);
                    nfa.add_epsilon(s, ps);
                    nfa.add_epsilon(pe, e);
                }
                (s, e)
            }
            RegexExpr::Star(a) | RegexExpr::Plus(a) => {
                let s = nfa.add_state();
                let e = nfa.add_state();
                let (ps, pe) = a.thompson(nfa);
                nfa.add_epsilon(s, ps);
                nfa.add_epsilon(pe, e);
                nfa.add_epsilon(pe, ps);
                if matches!(self, RegexExpr::Star(_)) {
                    nfa.add_epsilon(s, e);
                }
                (s, e)
            }
        }
    }
}

struct Parser<'a> {
    alphabet: &'a Alphabet,
    chars: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn union(&mut self) -> Result<RegexExpr, AutomatonError> {
        let mut expr = self.concat()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            expr = RegexExpr::union(expr, self.concat()?);
        }
        Ok(expr)
    }

    fn concat(&mut self) -> Result<RegexExpr, AutomatonError> {
        let mut expr: Option<RegexExpr> = None;
        while let Some(c) = self.peek() {
            if c == '+' || c == ')' {
                break;
            }
            let atom = self.postfix()?;
            expr = Some(match expr {
                None => atom,
                Some(prev) => RegexExpr::concat(prev, atom),
            });
        }
        expr.ok_or_else(|| AutomatonError::Regex(format!("empty operand at {}", self.pos)))
    }

    fn postfix(&mut self) -> Result<RegexExpr, AutomatonError> {
        let mut atom = self.atom()?;
        loop {
            match (self.peek(), self.chars.get(self.pos + 1)) {
                (Some('*'), _) => {
                    self.pos += 1;
                    atom = RegexExpr::star(atom);
                }
                (Some('^'), Some('+')) => {
                    self.pos += 2;
                    atom = RegexExpr::plus(atom);
                }
                _ => return Ok(atom),
            }
        }
    }

    fn atom(&mut self) -> Result<RegexExpr, AutomatonError> {
        let c = self.peek().ok_or_else(|| AutomatonError::Regex("unexpected end".into()))?;
        self.pos += 1;
        match c {
            '(' => {
                let inner = self.union()?;
                if self.peek() != Some(')') {
                    return Err(AutomatonError::Regex(format!("missing `)` at {}", self.pos)));
                }
                self.pos += 1;
                Ok(inner)
            }
            'λ' => Ok(RegexExpr::Epsilon),
            _ => {
                let mut buf = [0u8; 4];
                let name = c.encode_utf8(&mut buf);
                self.alphabet
                    .index(name)
                    .map(RegexExpr::Literal)
                    .ok_or_else(|| AutomatonError::UnknownSymbol(name.to_string()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dfa(alphabet: &Alphabet, text: &str) -> Dfa {
        RegexExpr::parse(alphabet, text).unwrap().to_dfa(alphabet)
    }

    #[test]
    fn star_of_single_letter() {
        let a = Alphabet::new(["A"]).unwrap();
        let d = dfa(&a, "A*");
        assert_eq!(d.num_states(), 1);
        assert!(d.is_accepting(0));
        assert_eq!(d.next(0, 0), Some(0));

        // over A B a rejecting sink is needed for B
        assert_eq!(dfa(&Alphabet::players(), "A*").num_states(), 2);
    }

    #[test]
    fn even_shift_winning_expression() {
        let ab = Alphabet::players();
        let d = dfa(&ab, "A*BB(A + AB)*");
        let accepts = |s: &str| d.accepts(&ab.parse_word(s).unwrap());
        assert!(accepts("BB"));
        assert!(accepts("AABBAAB"));
        assert!(!accepts("BBB"));
        assert!(!accepts("BBAB B".replace(' ', "").as_str()));
        assert!(!accepts("A"));
        // s0 (A*), s1 (after one B), s2 (needs A), s3 (may read B), sink
        assert_eq!(d.num_states(), 5);
    }

    #[test]
    fn plus_and_epsilon() {
        let ab = Alphabet::players();
        let d = dfa(&ab, "(AB(AA)^+)*");
        let accepts = |s: &str| d.accepts(&ab.parse_word(s).unwrap());
        assert!(accepts("λ"));
        assert!(accepts("ABAA"));
        assert!(accepts("ABAAAAABAA"));
        assert!(!accepts("AB"));
        assert!(!accepts("ABAAA"));
        assert!(dfa(&ab, "λ + A").accepts(&[]));
    }

    #[test]
    fn parse_errors() {
        let ab = Alphabet::players();
        assert!(RegexExpr::parse(&ab, "(AB").is_err());
        assert!(RegexExpr::parse(&ab, "AC").is_err());
        assert!(RegexExpr::parse(&ab, "A+").is_err());
        assert!(RegexExpr::parse(&Alphabet::digits(10), "0").is_err());
    }
}
