use std::fmt;
use std::str::FromStr;

use super::GameError;
use crate::automata::{Alphabet, Symbol, EMPTY_WORD};

/// A player of a word game. As letters of a turn order, `A < B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Player {
    A,
    B,
}

impl Player {
    /// Index of the player in [`Alphabet::players`].
    pub fn symbol(self) -> Symbol {
        match self {
            Player::A => 0,
            Player::B => 1,
        }
    }

    pub fn from_symbol(symbol: Symbol) -> Option<Player> {
        match symbol {
            0 => Some(Player::A),
            1 => Some(Player::B),
            _ => None,
        }
    }

    pub fn opponent(self) -> Player {
        match self {
            Player::A => Player::B,
            Player::B => Player::A,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::A => "A",
            Player::B => "B",
        })
    }
}

/// A word over `{A, B}` scheduling who picks each symbol.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TurnOrder(Vec<Player>);

impl TurnOrder {
    pub fn new(players: Vec<Player>) -> Self {
        Self(players)
    }

    /// Converts a word over [`Alphabet::players`].
    pub fn from_word(word: &[Symbol]) -> Option<Self> {
        word.iter().map(|&s| Player::from_symbol(s)).collect::<Option<Vec<_>>>().map(Self)
    }

    pub fn to_word(&self) -> Vec<Symbol> {
        self.0.iter().map(|p| p.symbol()).collect()
    }

    pub fn all_a(n: usize) -> Self {
        Self(vec![Player::A; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn players(&self) -> &[Player] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Player {
        self.0[i]
    }

    /// Coordinatewise comparison with `A < B`.
    pub fn is_below(&self, other: &TurnOrder) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for TurnOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str(EMPTY_WORD);
        }
        self.0.iter().try_for_each(|p| write!(f, "{p}"))
    }
}

impl FromStr for TurnOrder {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Alphabet::players()
            .parse_word(s)
            .ok()
            .and_then(|w| TurnOrder::from_word(&w))
            .ok_or_else(|| GameError::InvalidOrder(s.to_string()))
    }
}

/// Set sizes announced by A in a counting game, each at least 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountingOrder(Vec<usize>);

impl CountingOrder {
    pub fn new(sizes: Vec<usize>) -> Result<Self, GameError> {
        if let Some(position) = sizes.iter().position(|&k| k == 0) {
            return Err(GameError::CountOutOfRange { position, value: 0, alphabet: 0 });
        }
        Ok(Self(sizes))
    }

    /// The image of a turn order under `A ↦ 1, B ↦ 2`.
    pub fn from_turn_order(order: &TurnOrder) -> Self {
        Self(order.players().iter().map(|p| p.symbol() + 1).collect())
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Errors unless every entry lies in `1..=alphabet`.
    pub fn check(&self, alphabet: usize) -> Result<(), GameError> {
        match self.0.iter().position(|&k| k > alphabet) {
            Some(position) => Err(GameError::CountOutOfRange { position, value: self.0[position], alphabet }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for CountingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turn_order_text() {
        let o: TurnOrder = "BAB".parse().unwrap();
        assert_eq!(o.players(), &[Player::B, Player::A, Player::B]);
        assert_eq!(o.to_string(), "BAB");
        assert_eq!("λ".parse::<TurnOrder>().unwrap(), TurnOrder::default());
        assert!("BAC".parse::<TurnOrder>().is_err());
    }

    #[test]
    fn dominance() {
        let lo: TurnOrder = "AAB".parse().unwrap();
        let hi: TurnOrder = "BAB".parse().unwrap();
        assert!(lo.is_below(&hi));
        assert!(!hi.is_below(&lo));
        assert!(!lo.is_below(&"AB".parse().unwrap()));
    }

    #[test]
    fn counting_order_ranges() {
        assert!(CountingOrder::new(vec![1, 0]).is_err());
        let c = CountingOrder::new(vec![2, 3, 1]).unwrap();
        assert!(c.check(3).is_ok());
        assert!(c.check(2).is_err());
        assert_eq!(c.to_string(), "(2,3,1)");
        let t: TurnOrder = "ABA".parse().unwrap();
        assert_eq!(CountingOrder::from_turn_order(&t).sizes(), &[1, 2, 1]);
    }
}
