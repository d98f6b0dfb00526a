//! Shared helpers for unit tests.

use proptest::prelude::*;

use crate::alphabet::{AlignmentAlphabet, Symbol};
use crate::automata::Dfa;

/// All words of length `len` over an alphabet of `k` symbols.
pub fn words_over(k: usize, len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k as Symbol).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn all_words(len: usize) -> impl Iterator<Item = Vec<Symbol>> {
    words_over(2, len).into_iter()
}

/// Random complete DFA over {1,0} with up to 6 states.
pub fn arb_dfa() -> impl Strategy<Value = Dfa> {
    (1usize..=6).prop_flat_map(|n| {
        (
            0..n,
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(0..n, n * 2),
        )
            .prop_map(|(init, finals, delta)| {
                Dfa::new(AlignmentAlphabet::binary(), init, finals, delta).unwrap()
            })
    })
}
