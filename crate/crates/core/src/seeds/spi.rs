//! The subset-seed automaton `S_π`.
//!
//! A non-final state is a pair `⟨X, t⟩`: `t` is the length of the current run
//! of match symbols and `X` holds the lengths `x` of seed prefixes `π_1…π_x`
//! that match the text ending right before that run. Every such prefix ends
//! with a non-match symbol, so `X ⊆ R_π`. Because every letter contains the
//! match symbol, a prefix in `X` extends through the whole run, and the seed
//! has matched once `max X + t` reaches `m` (with `max ∅ = 0`).

use std::collections::hash_map::Entry;

use rustc_hash::FxHashMap;

use super::seed::Seed;
use crate::automata::{Dfa, StateId};

/// Bits `1..=len` set.
#[inline]
fn low_bits(len: usize) -> u128 {
    ((1u128 << (len + 1)) - 1) & !1
}

#[inline]
fn max_elem(x: u128) -> usize {
    if x == 0 {
        0
    } else {
        127 - x.leading_zeros() as usize
    }
}

/// Builds `S_π` for `seed`.
///
/// States are numbered in breadth-first discovery order from `⟨∅, 0⟩`,
/// symbols in alphabet order; all final states are merged into one absorbing
/// state. The automaton accepts exactly the words containing a fragment
/// matched by the seed.
pub fn build_spi_automaton(seed: &Seed) -> Dfa {
    let alphabet = seed.alphabet();
    let k = alphabet.len();
    let m = seed.span();
    let one = alphabet.match_symbol();

    // allowed[a] has bit x set iff a ∈ π_x (1-based).
    let allowed: Vec<u128> = alphabet
        .iter()
        .map(|a| {
            seed.letters()
                .iter()
                .enumerate()
                .filter(|(_, l)| l.contains(a))
                .fold(0u128, |acc, (i, _)| acc | 1 << (i + 1))
        })
        .collect();

    const FINAL: (u128, usize) = (u128::MAX, usize::MAX);
    let mut index: FxHashMap<(u128, usize), StateId> = FxHashMap::default();
    let mut states: Vec<(u128, usize)> = vec![(0, 0)];
    index.insert((0, 0), 0);
    let mut delta: Vec<StateId> = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let (x, t) = states[i];
        i += 1;
        if (x, t) == FINAL {
            delta.extend(std::iter::repeat_n(i - 1, k));
            continue;
        }
        debug_assert!(max_elem(x) + t < m, "non-final state past the seed end");
        for a in alphabet.iter() {
            let next = if a == one {
                (x, t + 1)
            } else {
                let fresh = allowed[a as usize] & low_bits(t + 1);
                let extended = (x << (t + 1)) & allowed[a as usize];
                (fresh | extended, 0)
            };
            let next = if max_elem(next.0) + next.1 >= m {
                debug_assert_eq!(max_elem(next.0) + next.1, m);
                FINAL
            } else {
                next
            };
            let id = match index.entry(next) {
                Entry::Occupied(e) => *e.get(),
                Entry::Vacant(e) => {
                    states.push(next);
                    *e.insert(states.len() - 1)
                }
            };
            delta.push(id);
        }
    }
    let finals = states.iter().map(|&s| s == FINAL).collect();
    Dfa::new(alphabet.clone(), 0, finals, delta).expect("S_pi construction is complete")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Symbol;
    use crate::automata::{aho_corasick_hit_dfa, equivalent};
    use crate::seeds::{SeedAlphabet, DEFAULT_FRAGMENT_CAP};
    use crate::testutil::words_over;
    use proptest::prelude::*;

    fn seed(text: &str, sa: &SeedAlphabet) -> Seed {
        Seed::parse(text, sa).unwrap()
    }

    fn naive_hits(s: &Seed, w: &[Symbol]) -> bool {
        w.windows(s.span()).any(|f| s.matches(f))
    }

    #[test]
    fn all_match_seed() {
        let d = build_spi_automaton(&seed("###", &SeedAlphabet::spaced()));
        // ⟨∅,0⟩ ⟨∅,1⟩ ⟨∅,2⟩ final
        assert_eq!(d.num_states(), 4);
        assert_eq!(d.row(0), &[1, 0]);
        assert_eq!(d.row(1), &[2, 0]);
        assert_eq!(d.row(2), &[3, 0]);
        assert_eq!(d.row(3), &[3, 3]);
        assert!(d.is_final(3));
    }

    #[test]
    fn gapped_seed_trace() {
        let d = build_spi_automaton(&seed("#_#", &SeedAlphabet::spaced()));
        // BFS: 0=⟨∅,0⟩ 1=⟨∅,1⟩ 2=⟨∅,2⟩ 3=⟨{2},0⟩ 4=final
        assert_eq!(d.num_states(), 5);
        assert_eq!(d.row(0), &[1, 0]);
        assert_eq!(d.row(1), &[2, 3]);
        // ⟨∅,2⟩ on 1 completes ###-style run of three matches.
        assert_eq!(d.row(2), &[4, 3]);
        // ⟨{2},0⟩ on 1: 2 + 1 = 3 = m.
        assert_eq!(d.row(3), &[4, 0]);
        assert!(d.is_final(4));
    }

    #[test]
    fn bfs_numbering_is_deterministic() {
        let sa = SeedAlphabet::dna_subset();
        let a = build_spi_automaton(&seed("#@_#@#", &sa));
        let b = build_spi_automaton(&seed("#@_#@#", &sa));
        assert_eq!(a, b);
    }

    fn arb_seed(sa: SeedAlphabet, max_span: usize) -> impl Strategy<Value = Seed> {
        let glyphs: Vec<char> = sa.letters().iter().map(|l| l.glyph()).collect();
        proptest::collection::vec(proptest::sample::select(glyphs), 1..=max_span)
            .prop_map(move |g| Seed::parse(&g.into_iter().collect::<String>(), &sa).unwrap())
    }

    proptest! {
        #[test]
        fn spaced_matches_naive(s in arb_seed(SeedAlphabet::spaced(), 7)) {
            let d = build_spi_automaton(&s);
            prop_assert!(d.is_complete());
            prop_assert!(d.num_states() as u128 <= s.state_bound());
            for len in 0..=8 {
                for w in words_over(2, len) {
                    prop_assert_eq!(d.accepts(&w), naive_hits(&s, &w));
                }
            }
        }

        #[test]
        fn subset_equals_aho_corasick(s in arb_seed(SeedAlphabet::dna_subset(), 7)) {
            let d = build_spi_automaton(&s);
            let ac = aho_corasick_hit_dfa(
                s.alphabet(),
                &s.matched_fragments(DEFAULT_FRAGMENT_CAP).unwrap(),
            ).unwrap();
            prop_assert!(equivalent(&d, &ac).unwrap());
            prop_assert!(d.num_states() <= ac.num_states());
            prop_assert!(d.num_states() as u128 <= s.state_bound());
            prop_assert!(d.accepts(&vec![0; s.span()]));
            prop_assert_eq!(s.aho_corasick_states(), ac.num_states() as u128);
            prop_assert_eq!(s.aho_corasick(DEFAULT_FRAGMENT_CAP).unwrap().num_states(), ac.num_states());
        }
    }
}
