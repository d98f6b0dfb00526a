use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::alphabet::Symbol;
use crate::automata::{Dfa, StateId};
use crate::error::Result;
use crate::probmodel::ProbTransducer;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PwEdge {
    pub symbol: Symbol,
    pub dst: usize,
    pub prob: f64,
}

/// Probability-weighted product of a DFA `K` and a transducer `G`.
///
/// Only pairs reachable from `(K.initial, G.initial)` are built; state 0 is
/// the initial pair. A pair is final when its `K` component is final. Edge
/// `(k, g) -a-> (ψ_K(k, a), g')` carries `ρ_G(g, a, g')`.
#[derive(Clone, Debug)]
pub struct PwAutomaton {
    pairs: Vec<(StateId, usize)>,
    finals: Vec<bool>,
    offsets: Vec<usize>,
    edges: Vec<PwEdge>,
}

impl PwAutomaton {
    pub fn num_states(&self) -> usize {
        self.pairs.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn initial(&self) -> usize {
        0
    }

    /// The `(K state, G state)` pair behind product state `q`.
    pub fn pair(&self, q: usize) -> (StateId, usize) {
        self.pairs[q]
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn edges(&self, q: usize) -> &[PwEdge] {
        &self.edges[self.offsets[q]..self.offsets[q + 1]]
    }

    /// Product states from which a final state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for q in 0..n {
            for e in self.edges(q) {
                preds[e.dst].push(q);
            }
        }
        let mut live = self.finals.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&q| self.finals[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }
}

pub fn pw_product(k: &Dfa, g: &ProbTransducer) -> Result<PwAutomaton> {
    k.alphabet().ensure_same(g.alphabet())?;
    let start = (k.initial(), g.initial());
    let mut pairs = vec![start];
    let mut index: HashMap<(StateId, usize), usize> = HashMap::from([(start, 0)]);
    let mut offsets = vec![0];
    let mut edges = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let (kq, gq) = pairs[i];
        i += 1;
        for t in g.outgoing(gq) {
            let next = (k.next(kq, t.symbol), t.dst);
            let dst = match index.entry(next) {
                Entry::Occupied(e) => *e.get(),
                Entry::Vacant(e) => {
                    pairs.push(next);
                    *e.insert(pairs.len() - 1)
                }
            };
            edges.push(PwEdge {
                symbol: t.symbol,
                dst,
                prob: t.prob,
            });
        }
        offsets.push(edges.len());
    }
    let finals = pairs.iter().map(|&(kq, _)| k.is_final(kq)).collect();
    Ok(PwAutomaton {
        pairs,
        finals,
        offsets,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::AlignmentAlphabet;
    use crate::probmodel::bernoulli;

    #[test]
    fn contains_match_times_bernoulli() {
        let ab = AlignmentAlphabet::binary();
        let k = Dfa::new(ab.clone(), 0, vec![false, true], vec![1, 0, 1, 1]).unwrap();
        let g = bernoulli(&ab, &[0.7, 0.3]).unwrap();
        let w = pw_product(&k, &g).unwrap();
        assert_eq!(w.num_states(), 2);
        for q in 0..2 {
            let probs: Vec<f64> = w.edges(q).iter().map(|e| e.prob).collect();
            assert_eq!(probs, vec![0.7, 0.3]);
        }
        assert!(!w.is_final(0));
        assert!(w.is_final(1));
    }

    #[test]
    fn state_count_bound_and_stochastic_rows() {
        let ab = AlignmentAlphabet::binary();
        let k = Dfa::from_fn(ab.clone(), 5, 0, |q| q == 3, |q, a| (q + 1 + a as usize) % 5).unwrap();
        let g = bernoulli(&ab, &[0.4, 0.6]).unwrap();
        let w = pw_product(&k, &g).unwrap();
        assert!(w.num_states() <= 5);
        for q in 0..w.num_states() {
            let s: f64 = w.edges(q).iter().map(|e| e.prob).sum();
            assert!((s - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn alphabet_mismatch() {
        let k = Dfa::universal(AlignmentAlphabet::binary());
        let g = bernoulli(&AlignmentAlphabet::dna(), &[0.5, 0.25, 0.25]).unwrap();
        assert!(pw_product(&k, &g).is_err());
    }
}
