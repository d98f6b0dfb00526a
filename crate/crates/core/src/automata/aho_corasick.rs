//! Aho-Corasick matching automaton completed into a "contains a pattern" DFA.

use std::collections::VecDeque;

use super::dfa::{Dfa, StateId};
use crate::alphabet::{AlignmentAlphabet, Symbol};
use crate::error::{Error, Result};

pub(crate) const NONE: usize = usize::MAX;

/// Builds the complete DFA for `Σ* · patterns · Σ*`.
///
/// The pattern trie is completed with failure links; every node whose
/// prefix contains a pattern collapses into one absorbing final state. The
/// remaining states are the trie nodes free of any pattern occurrence,
/// numbered in breadth-first trie order, and the final state comes last.
pub fn aho_corasick_hit_dfa(alphabet: &AlignmentAlphabet, patterns: &[Vec<Symbol>]) -> Result<Dfa> {
    if patterns.is_empty() {
        return Err(Error::InvalidPatterns("empty pattern set".into()));
    }
    let k = alphabet.len();
    let mut goto: Vec<usize> = vec![NONE; k];
    let mut terminal = vec![false];
    for (i, p) in patterns.iter().enumerate() {
        if p.is_empty() {
            return Err(Error::InvalidPatterns(format!("pattern {i} is empty")));
        }
        let mut node = 0;
        for &a in p {
            if a as usize >= k {
                return Err(Error::InvalidPatterns(format!(
                    "pattern {i} uses symbol {a} outside the alphabet"
                )));
            }
            let slot = node * k + a as usize;
            node = if goto[slot] == NONE {
                let id = terminal.len();
                terminal.push(false);
                goto.extend(std::iter::repeat_n(NONE, k));
                goto[slot] = id;
                id
            } else {
                goto[slot]
            };
        }
        terminal[node] = true;
    }

    complete_trie(alphabet, goto, terminal)
}

/// Adds failure links to a trie given as a dense `goto` table (`NONE` for
/// missing edges, node 0 the root) and collapses hit nodes.
pub(crate) fn complete_trie(alphabet: &AlignmentAlphabet, mut goto: Vec<usize>, terminal: Vec<bool>) -> Result<Dfa> {
    let k = alphabet.len();
    let n = terminal.len();
    let mut fail = vec![0usize; n];
    let mut hit = terminal;
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for a in 0..k {
            let slot = u * k + a;
            let child = goto[slot];
            if child == NONE {
                goto[slot] = if u == 0 { 0 } else { goto[fail[u] * k + a] };
            } else {
                fail[child] = if u == 0 { 0 } else { goto[fail[u] * k + a] };
                hit[child] |= hit[fail[child]];
                queue.push_back(child);
            }
        }
    }

    let mut id = vec![NONE; n];
    let mut live = 0;
    for &u in &order {
        if !hit[u] {
            id[u] = live;
            live += 1;
        }
    }
    let final_id = live;
    let map = |u: usize| if hit[u] { final_id } else { id[u] };
    let mut delta: Vec<StateId> = Vec::with_capacity((live + 1) * k);
    for &u in order.iter().filter(|&&u| !hit[u]) {
        delta.extend((0..k).map(|a| map(goto[u * k + a])));
    }
    delta.extend(std::iter::repeat_n(final_id, k));
    let mut finals = vec![false; live + 1];
    finals[final_id] = true;
    Dfa::new(alphabet.clone(), map(0), finals, delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::all_words;

    fn naive_contains(w: &[Symbol], pats: &[Vec<Symbol>]) -> bool {
        pats.iter()
            .any(|p| w.windows(p.len()).any(|win| win == p.as_slice()))
    }

    #[test]
    fn fragments_of_gapped_seed() {
        let ab = AlignmentAlphabet::binary();
        let pats = vec![vec![0, 0, 0], vec![0, 1, 0]]; // 111, 101
        let d = aho_corasick_hit_dfa(&ab, &pats).unwrap();
        // ε, 1, 11, 10 + merged final
        assert_eq!(d.num_states(), 5);
        for len in 0..=7 {
            for w in all_words(len) {
                assert_eq!(d.accepts(&w), naive_contains(&w, &pats));
            }
        }
    }

    #[test]
    fn single_symbol() {
        let d = aho_corasick_hit_dfa(&AlignmentAlphabet::binary(), &[vec![0]]).unwrap();
        assert_eq!(d.num_states(), 2);
        assert!(d.accepts(&[1, 1, 0]));
        assert!(!d.accepts(&[1, 1]));
    }

    #[test]
    fn pattern_inside_another_prefix() {
        // "1" is a factor of "01", so the node for "01" is never live.
        let ab = AlignmentAlphabet::binary();
        let pats = vec![vec![1, 0], vec![0]];
        let d = aho_corasick_hit_dfa(&ab, &pats).unwrap();
        assert_eq!(d.num_states(), 3);
        for len in 0..=6 {
            for w in all_words(len) {
                assert_eq!(d.accepts(&w), naive_contains(&w, &pats));
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let ab = AlignmentAlphabet::binary();
        assert!(aho_corasick_hit_dfa(&ab, &[]).is_err());
        assert!(aho_corasick_hit_dfa(&ab, &[vec![]]).is_err());
        assert!(aho_corasick_hit_dfa(&ab, &[vec![2]]).is_err());
    }
}
