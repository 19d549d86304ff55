use std::collections::HashMap;

use super::ZooError;
use crate::automata::{Alphabet, Dfa, Nfa, StateId};

/// `E_k(X)` for a binary `X`: every `1`-edge is replicated for each of the
/// symbols `1..=k`, so the ones of a point may become any nonzero symbol.
/// This agrees with the extension of `X` when `X` is downward closed.
pub fn extend(d: &Dfa, k: usize) -> Result<Dfa, ZooError> {
    if d.alphabet().len() != 2 {
        return Err(ZooError::NotBinary(d.alphabet().len()));
    }
    if k == 0 {
        return Err(ZooError::InvalidParameter("extension needs k ≥ 1".into()));
    }
    let transitions = d.transitions().flat_map(|(p, c, q)| {
        let symbols = if c == 0 { 0..=0 } else { 1..=k };
        symbols.map(move |s| (p, s, q))
    });
    let out = Dfa::new(Alphabet::digits(k), d.num_states(), d.initial(), d.accepting_states(), transitions)?;
    Ok(out.minimized())
}

/// Image under the symbol map sending the largest symbol to `1` and every
/// other symbol to `0`.
pub fn counting_projection(d: &Dfa) -> Dfa {
    let top = d.alphabet().len() - 1;
    Nfa::from_dfa(d).relabel(Alphabet::binary(), |c| usize::from(c == top)).determinize().minimized()
}

/// Presentation of `X × Y` over the alphabet of symbol pairs. Pairs are named
/// by juxtaposition when both alphabets use single characters, otherwise as
/// `x.y`.
pub fn shift_product(x: &Dfa, y: &Dfa) -> Result<Dfa, ZooError> {
    let (sx, sy) = (x.alphabet(), y.alphabet());
    let glue = if sx.is_single_char() && sy.is_single_char() { "" } else { "." };
    let names = sx.iter().flat_map(|a| sy.iter().map(move |b| format!("{}{glue}{}", sx.name(a), sy.name(b))));
    let pairs = Alphabet::new(names.collect::<Vec<_>>())?;
    let ky = sy.len();

    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::from([((x.initial(), y.initial()), 0)]);
    let mut states = vec![(x.initial(), y.initial())];
    let mut table = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let (p, q) = states[i];
        let mut row = vec![None; pairs.len()];
        for a in sx.iter() {
            for b in sy.iter() {
                if let (Some(p2), Some(q2)) = (x.next(p, a), y.next(q, b)) {
                    let id = *index.entry((p2, q2)).or_insert_with(|| {
                        states.push((p2, q2));
                        states.len() - 1
                    });
                    row[a * ky + b] = Some(id);
                }
            }
        }
        table.push(row);
        i += 1;
    }
    let accepting = states.iter().map(|&(p, q)| x.is_accepting(p) && y.is_accepting(q)).collect();
    Ok(Dfa::from_table(pairs, table, 0, accepting)?.minimized())
}
