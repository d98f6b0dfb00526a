use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};

use super::dfa::{Dfa, StateId};
use crate::error::Result;

/// Intersection product restricted to pairs reachable from the initial pair.
/// A pair is final iff both components are final.
pub fn product_intersection(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    a.alphabet().ensure_same(b.alphabet())?;
    let alphabet = a.alphabet();
    let k = alphabet.len();
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs = vec![(a.initial(), b.initial())];
    index.insert(pairs[0], 0);
    let mut delta = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let (p, q) = pairs[i];
        i += 1;
        for s in alphabet.iter() {
            let next = (a.next(p, s), b.next(q, s));
            let id = match index.entry(next) {
                Entry::Occupied(e) => *e.get(),
                Entry::Vacant(e) => {
                    pairs.push(next);
                    *e.insert(pairs.len() - 1)
                }
            };
            delta.push(id);
        }
    }
    debug_assert_eq!(delta.len(), pairs.len() * k);
    let finals = pairs
        .iter()
        .map(|&(p, q)| a.is_final(p) && b.is_final(q))
        .collect();
    Dfa::new(alphabet.clone(), 0, finals, delta)
}

/// Language equality by walking the reachable pairs of the product and
/// checking that both sides agree on finality everywhere.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool> {
    a.alphabet().ensure_same(b.alphabet())?;
    let start = (a.initial(), b.initial());
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some((p, q)) = stack.pop() {
        if a.is_final(p) != b.is_final(q) {
            return Ok(false);
        }
        for s in a.alphabet().iter() {
            let next = (a.next(p, s), b.next(q, s));
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    Ok(true)
}
