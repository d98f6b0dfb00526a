use std::collections::HashSet;
use std::fmt;

use crate::alphabet::{AlignmentAlphabet, Symbol};
use crate::error::{Error, Result};

/// Allowed deviation of a state's outgoing probability mass from 1.
pub const ROW_SUM_TOLERANCE: f64 = 1e-9;

/// Slack for rounding in the row sum itself, so a row summing to exactly
/// `1 - ROW_SUM_TOLERANCE` in decimal is accepted.
const ROUNDING_SLACK: f64 = 8.0 * f64::EPSILON;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Transition {
    pub src: usize,
    pub symbol: Symbol,
    pub dst: usize,
    pub prob: f64,
}

/// Reasons a transducer violates the stochastic constraints.
#[derive(Clone, Debug, PartialEq)]
pub enum Diagnostic {
    RowSum { state: usize, sum: f64 },
    Duplicate { src: usize, symbol: Symbol, dst: usize },
    Probability { index: usize, prob: f64 },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::RowSum { state, sum } => write!(f, "state {state} sums to {sum}"),
            Diagnostic::Duplicate { src, symbol, dst } => {
                write!(f, "duplicate transition {src} {symbol} {dst}")
            }
            Diagnostic::Probability { index, prob } => {
                write!(f, "transition {index} has probability {prob} outside (0, 1]")
            }
        }
    }
}

/// A probability transducer: a finite automaton without final states whose
/// transitions carry probabilities summing to one out of every state.
///
/// Zero-probability transitions are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbTransducer {
    alphabet: AlignmentAlphabet,
    num_states: usize,
    initial: usize,
    transitions: Vec<Transition>,
    /// `transitions` is sorted by source; `offsets[q]..offsets[q + 1]` are q's.
    offsets: Vec<usize>,
}

impl ProbTransducer {
    /// Builds and validates a transducer. Zero-probability entries are dropped.
    pub fn new(
        alphabet: AlignmentAlphabet,
        num_states: usize,
        initial: usize,
        transitions: Vec<Transition>,
    ) -> Result<Self> {
        let g = Self::new_unchecked(alphabet, num_states, initial, transitions)?;
        let diags = g.validate();
        if diags.is_empty() {
            Ok(g)
        } else {
            let msgs: Vec<String> = diags.iter().map(ToString::to_string).collect();
            Err(Error::InvalidModel(msgs.join("; ")))
        }
    }

    /// Checks only the structure (state and symbol ranges); use
    /// [`validate`](Self::validate) for the stochastic constraints.
    pub fn new_unchecked(
        alphabet: AlignmentAlphabet,
        num_states: usize,
        initial: usize,
        mut transitions: Vec<Transition>,
    ) -> Result<Self> {
        if num_states == 0 {
            return Err(Error::InvalidModel("no states".into()));
        }
        if initial >= num_states {
            return Err(Error::InvalidModel(format!(
                "initial state {initial} out of range ({num_states} states)"
            )));
        }
        for t in &transitions {
            if t.src >= num_states || t.dst >= num_states {
                return Err(Error::InvalidModel(format!(
                    "transition {} {} {} references a missing state",
                    t.src, t.symbol, t.dst
                )));
            }
            if t.symbol as usize >= alphabet.len() {
                return Err(Error::InvalidModel(format!(
                    "symbol {} outside the alphabet",
                    t.symbol
                )));
            }
        }
        transitions.retain(|t| t.prob != 0.0);
        transitions.sort_by_key(|t| (t.src, t.symbol, t.dst));
        let mut offsets = vec![0usize; num_states + 1];
        for t in &transitions {
            offsets[t.src + 1] += 1;
        }
        for q in 0..num_states {
            offsets[q + 1] += offsets[q];
        }
        Ok(Self {
            alphabet,
            num_states,
            initial,
            transitions,
            offsets,
        })
    }

    /// Lists every violated invariant; empty means valid.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        for (index, t) in self.transitions.iter().enumerate() {
            if !(t.prob > 0.0 && t.prob <= 1.0) {
                out.push(Diagnostic::Probability { index, prob: t.prob });
            }
        }
        let mut seen = HashSet::new();
        for t in &self.transitions {
            if !seen.insert((t.src, t.symbol, t.dst)) {
                out.push(Diagnostic::Duplicate {
                    src: t.src,
                    symbol: t.symbol,
                    dst: t.dst,
                });
            }
        }
        for q in 0..self.num_states {
            let sum: f64 = self.outgoing(q).iter().map(|t| t.prob).sum();
            if (sum - 1.0).abs() > ROW_SUM_TOLERANCE + ROUNDING_SLACK {
                out.push(Diagnostic::RowSum { state: q, sum });
            }
        }
        out
    }

    pub fn alphabet(&self) -> &AlignmentAlphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// Transitions leaving `q`, ordered by symbol then target.
    pub fn outgoing(&self, q: usize) -> &[Transition] {
        &self.transitions[self.offsets[q]..self.offsets[q + 1]]
    }

    /// At most one transition per `(state, symbol)`.
    pub fn is_deterministic(&self) -> bool {
        (0..self.num_states).all(|q| {
            self.outgoing(q)
                .windows(2)
                .all(|w| w[0].symbol != w[1].symbol)
        })
    }

    /// Sum over all initial paths labelled `word` of the product of their
    /// probabilities, computed with a forward vector.
    pub fn word_probability(&self, word: &[Symbol]) -> f64 {
        let mut mass = vec![0.0; self.num_states];
        mass[self.initial] = 1.0;
        let mut next = vec![0.0; self.num_states];
        for &a in word {
            next.iter_mut().for_each(|m| *m = 0.0);
            for (q, &m) in mass.iter().enumerate() {
                if m == 0.0 {
                    continue;
                }
                for t in self.outgoing(q).iter().filter(|t| t.symbol == a) {
                    next[t.dst] += m * t.prob;
                }
            }
            std::mem::swap(&mut mass, &mut next);
        }
        mass.iter().sum()
    }

    /// Sum of [`word_probability`](Self::word_probability) over a finite set.
    pub fn language_probability<'a, I>(&self, words: I) -> f64
    where
        I: IntoIterator<Item = &'a [Symbol]>,
    {
        words.into_iter().map(|w| self.word_probability(w)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probmodel::bernoulli;
    use crate::testutil::words_over;

    fn tr(src: usize, symbol: Symbol, dst: usize, prob: f64) -> Transition {
        Transition {
            src,
            symbol,
            dst,
            prob,
        }
    }

    #[test]
    fn row_sum_diagnostic() {
        let g = ProbTransducer::new_unchecked(
            AlignmentAlphabet::binary(),
            1,
            0,
            vec![tr(0, 0, 0, 0.5), tr(0, 1, 0, 0.4)],
        )
        .unwrap();
        let d = g.validate();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].to_string(), "state 0 sums to 0.9");
        assert!(ProbTransducer::new(
            AlignmentAlphabet::binary(),
            1,
            0,
            vec![tr(0, 0, 0, 0.6), tr(0, 1, 0, 0.3)]
        )
        .is_err());
    }

    #[test]
    fn tolerance_boundary() {
        // Four hidden components; state 3 sums to 0.999999999.
        let mut ts = Vec::new();
        for q in 0..4 {
            ts.push(tr(q, 0, (q + 1) % 4, 0.5));
            ts.push(tr(q, 1, q, if q == 3 { 0.499999999 } else { 0.5 }));
        }
        let g = ProbTransducer::new(AlignmentAlphabet::binary(), 4, 0, ts.clone()).unwrap();
        assert!(g.validate().is_empty());
        ts[7].prob = 0.49999999;
        assert!(ProbTransducer::new(AlignmentAlphabet::binary(), 4, 0, ts).is_err());
    }

    #[test]
    fn duplicate_and_range_errors() {
        let ab = AlignmentAlphabet::binary();
        let g = ProbTransducer::new_unchecked(
            ab.clone(),
            1,
            0,
            vec![tr(0, 0, 0, 0.5), tr(0, 0, 0, 0.2), tr(0, 1, 0, 0.3)],
        )
        .unwrap();
        assert!(matches!(g.validate()[0], Diagnostic::Duplicate { .. }));
        assert!(ProbTransducer::new_unchecked(ab.clone(), 1, 0, vec![tr(0, 0, 1, 1.0)]).is_err());
        assert!(ProbTransducer::new_unchecked(ab.clone(), 1, 1, vec![]).is_err());
        assert!(ProbTransducer::new_unchecked(ab, 1, 0, vec![tr(0, 5, 0, 1.0)]).is_err());
    }

    #[test]
    fn word_probabilities() {
        let g = bernoulli(&AlignmentAlphabet::binary(), &[0.7, 0.3]).unwrap();
        assert!((g.word_probability(&[0, 0]) - 0.49).abs() < 1e-15);
        assert_eq!(g.word_probability(&[]), 1.0);
        let words: Vec<Vec<Symbol>> = vec![vec![0, 0], vec![0, 1]];
        let p = g.language_probability(words.iter().map(Vec::as_slice));
        assert!((p - 0.70).abs() < 1e-15);
        let words: Vec<Vec<Symbol>> = vec![vec![0, 0, 0], vec![0, 0, 1], vec![1, 0, 0]];
        let p = g.language_probability(words.iter().map(Vec::as_slice));
        assert!((p - 0.637).abs() < 1e-12);
        let all = words_over(2, 2);
        let p = g.language_probability(all.iter().map(Vec::as_slice));
        assert!((p - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_paths_same_label() {
        // From 0: "1" to 1 (0.2) or to 2 (0.4); then "0" from 1 (0.3) and 2 (0.1).
        let g = ProbTransducer::new(
            AlignmentAlphabet::binary(),
            3,
            0,
            vec![
                tr(0, 0, 1, 0.2),
                tr(0, 0, 2, 0.4),
                tr(0, 1, 0, 0.4),
                tr(1, 1, 1, 0.3),
                tr(1, 0, 0, 0.7),
                tr(2, 1, 2, 0.1),
                tr(2, 0, 0, 0.9),
            ],
        )
        .unwrap();
        assert!(!g.is_deterministic());
        assert!((g.word_probability(&[0, 1]) - 0.10).abs() < 1e-15);
        assert!((g.word_probability(&[1, 1]) - 0.16).abs() < 1e-15);
        let only_match = bernoulli(&AlignmentAlphabet::binary(), &[1.0, 0.0]).unwrap();
        assert_eq!(only_match.word_probability(&[0, 1]), 0.0);
    }
}
