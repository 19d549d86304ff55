use std::collections::BTreeMap;

use super::{Player, TurnOrder};
use crate::automata::{FiniteLanguage, Symbol, Word};

/// Moves of one player, keyed by the prefix played so far.
///
/// Only prefixes reachable under the strategy that stay inside the target's
/// prefix tree are stored. Any other prefix is already lost for A, and the
/// strategy plays the smallest symbol there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strategy {
    player: Player,
    order: TurnOrder,
    moves: BTreeMap<Word, Symbol>,
}

impl Strategy {
    pub fn player(&self) -> Player {
        self.player
    }

    pub fn order(&self) -> &TurnOrder {
        &self.order
    }

    pub fn moves(&self) -> &BTreeMap<Word, Symbol> {
        &self.moves
    }

    pub fn choice(&self, prefix: &[Symbol]) -> Symbol {
        self.moves.get(prefix).copied().unwrap_or(0)
    }

    /// Plays a full game, asking `opponent` for the other player's moves.
    pub fn play(&self, mut opponent: impl FnMut(&[Symbol]) -> Symbol) -> Word {
        let mut word = Vec::with_capacity(self.order.len());
        for &p in self.order.players() {
            let c = if p == self.player { self.choice(&word) } else { opponent(&word) };
            word.push(c);
        }
        word
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameResult {
    pub winner: Player,
    pub witness: Strategy,
}

/// Backward-induction table for one target and one turn order.
///
/// Words of `L` whose length differs from the order are ignored.
#[derive(Clone, Debug)]
pub struct GameSolver<'a> {
    lang: &'a FiniteLanguage,
    order: TurnOrder,
    win: Vec<bool>,
}

impl<'a> GameSolver<'a> {
    pub fn new(lang: &'a FiniteLanguage, order: TurnOrder) -> Self {
        let mut solver = Self { lang, order, win: vec![false; lang.num_nodes()] };
        solver.eval(0, 0);
        solver
    }

    fn eval(&mut self, node: usize, depth: usize) -> bool {
        let value = if depth == self.order.len() {
            self.lang.is_terminal(node)
        } else {
            let mut any = false;
            let mut all = true;
            for c in self.lang.alphabet().iter() {
                let w = match self.lang.child(node, c) {
                    Some(child) => self.eval(child, depth + 1),
                    None => false,
                };
                any |= w;
                all &= w;
            }
            match self.order.get(depth) {
                Player::A => any,
                Player::B => all,
            }
        };
        self.win[node] = value;
        value
    }

    pub fn order(&self) -> &TurnOrder {
        &self.order
    }

    pub fn winner(&self) -> Player {
        if self.win[0] {
            Player::A
        } else {
            Player::B
        }
    }

    /// Whether A wins the remaining game after `prefix` has been played.
    pub fn a_wins_from(&self, prefix: &[Symbol]) -> bool {
        prefix.len() <= self.order.len() && self.lang.walk(prefix).is_some_and(|node| self.win[node])
    }

    /// The move of the player to act after `prefix`: the smallest winning
    /// symbol if one exists, otherwise the smallest symbol that keeps the
    /// word inside the target's prefix tree, otherwise the smallest symbol.
    pub fn best_move(&self, prefix: &[Symbol]) -> Symbol {
        let Some(node) = self.lang.walk(prefix) else { return 0 };
        let player = self.order.get(prefix.len());
        let mut fallback = None;
        for c in self.lang.alphabet().iter() {
            match self.lang.child(node, c) {
                Some(child) => {
                    if self.win[child] == (player == Player::A) {
                        return c;
                    }
                    fallback.get_or_insert(c);
                }
                None if player == Player::B => return c,
                None => {}
            }
        }
        fallback.unwrap_or(0)
    }

    /// A winning strategy for [`GameSolver::winner`].
    pub fn witness(&self) -> Strategy {
        let player = self.winner();
        let mut moves = BTreeMap::new();
        let mut prefix = Vec::new();
        self.collect(player, &mut prefix, &mut moves);
        Strategy { player, order: self.order.clone(), moves }
    }

    fn collect(&self, player: Player, prefix: &mut Word, moves: &mut BTreeMap<Word, Symbol>) {
        if prefix.len() == self.order.len() || self.lang.walk(prefix).is_none() {
            return;
        }
        let candidates: Vec<Symbol> = if self.order.get(prefix.len()) == player {
            let c = self.best_move(prefix);
            moves.insert(prefix.clone(), c);
            vec![c]
        } else {
            self.lang.alphabet().iter().collect()
        };
        for c in candidates {
            prefix.push(c);
            self.collect(player, prefix, moves);
            prefix.pop();
        }
    }

    pub fn result(&self) -> GameResult {
        GameResult { winner: self.winner(), witness: self.witness() }
    }
}

/// Solves the ordered game on `lang` with turn order `order`.
pub fn solve_game(lang: &FiniteLanguage, order: &TurnOrder) -> GameResult {
    GameSolver::new(lang, order.clone()).result()
}
