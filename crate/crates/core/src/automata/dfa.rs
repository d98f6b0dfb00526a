use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::alphabet::{AlignmentAlphabet, Symbol};
use crate::error::{Error, Result};

pub type StateId = usize;

/// A complete deterministic automaton over an [`AlignmentAlphabet`].
///
/// Transitions are stored densely, state-major and symbol-minor, so every
/// `(state, symbol)` pair has exactly one target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: AlignmentAlphabet,
    initial: StateId,
    finals: Vec<bool>,
    delta: Vec<StateId>,
}

impl Dfa {
    /// Builds a DFA from its parts. `finals.len()` is the number of states and
    /// `delta` must hold `num_states * alphabet.len()` targets.
    pub fn new(
        alphabet: AlignmentAlphabet,
        initial: StateId,
        finals: Vec<bool>,
        delta: Vec<StateId>,
    ) -> Result<Self> {
        let n = finals.len();
        if n == 0 {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        if initial >= n {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range ({n} states)"
            )));
        }
        if delta.len() != n * alphabet.len() {
            return Err(Error::InvalidAutomaton(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                n * alphabet.len()
            )));
        }
        if let Some(bad) = delta.iter().find(|&&q| q >= n) {
            return Err(Error::InvalidAutomaton(format!(
                "transition target {bad} out of range ({n} states)"
            )));
        }
        Ok(Self {
            alphabet,
            initial,
            finals,
            delta,
        })
    }

    /// Builds a DFA with `num_states` states from a transition function.
    pub fn from_fn(
        alphabet: AlignmentAlphabet,
        num_states: usize,
        initial: StateId,
        is_final: impl Fn(StateId) -> bool,
        next: impl Fn(StateId, Symbol) -> StateId,
    ) -> Result<Self> {
        let finals = (0..num_states).map(&is_final).collect();
        let delta = (0..num_states)
            .flat_map(|q| alphabet.iter().map(move |a| (q, a)))
            .map(|(q, a)| next(q, a))
            .collect();
        Self::new(alphabet, initial, finals, delta)
    }

    /// One-state automaton accepting every word.
    pub fn universal(alphabet: AlignmentAlphabet) -> Self {
        let k = alphabet.len();
        Self {
            alphabet,
            initial: 0,
            finals: vec![true],
            delta: vec![0; k],
        }
    }

    pub fn alphabet(&self) -> &AlignmentAlphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter_map(|(q, &f)| f.then_some(q))
    }

    #[inline]
    pub fn next(&self, q: StateId, a: Symbol) -> StateId {
        self.delta[q * self.alphabet.len() + a as usize]
    }

    pub fn row(&self, q: StateId) -> &[StateId] {
        let k = self.alphabet.len();
        &self.delta[q * k..(q + 1) * k]
    }

    pub fn run(&self, word: &[Symbol]) -> StateId {
        word.iter().fold(self.initial, |q, &a| self.next(q, a))
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        self.is_final(self.run(word))
    }

    /// Scans the table: every entry addresses an existing state.
    pub fn is_complete(&self) -> bool {
        self.delta.len() == self.num_states() * self.alphabet.len()
            && self.delta.iter().all(|&q| q < self.num_states())
    }

    /// Reachable states in breadth-first discovery order (symbols in
    /// alphabet order), starting with the initial state.
    pub fn bfs_order(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            i += 1;
            for &p in self.row(q) {
                if !seen[p] {
                    seen[p] = true;
                    order.push(p);
                }
            }
        }
        order
    }

    /// States from which some final state can be reached.
    pub fn coreachable(&self) -> Vec<bool> {
        let n = self.num_states();
        let k = self.alphabet.len();
        let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (i, &p) in self.delta.iter().enumerate() {
            preds[p].push(i / k);
        }
        let mut live = self.finals.clone();
        let mut stack: Vec<StateId> = self.finals().collect();
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

    /// Length of the longest accepted word, `None` for the empty language.
    ///
    /// Fails when the accepted language is infinite, i.e. a cycle runs
    /// through states that are both reachable and co-reachable.
    pub fn longest_accepted_length(&self) -> Result<Option<usize>> {
        let live = self.coreachable();
        if !live[self.initial] {
            return Ok(None);
        }
        let reachable = self.bfs_order();
        let useful: Vec<StateId> = reachable.into_iter().filter(|&q| live[q]).collect();
        let n = self.num_states();
        let mut indegree = vec![0usize; n];
        let mut in_useful = vec![false; n];
        for &q in &useful {
            in_useful[q] = true;
        }
        for &q in &useful {
            for &p in self.row(q) {
                if in_useful[p] {
                    indegree[p] += 1;
                }
            }
        }
        // Kahn's algorithm over the useful subgraph; longest path to a final.
        let mut dist: Vec<Option<usize>> = vec![None; n];
        dist[self.initial] = Some(0);
        let mut queue: VecDeque<StateId> = useful
            .iter()
            .copied()
            .filter(|&q| indegree[q] == 0)
            .collect();
        let mut visited = 0;
        let mut best = None;
        while let Some(q) = queue.pop_front() {
            visited += 1;
            if let Some(d) = dist[q] {
                if self.finals[q] {
                    best = best.max(Some(d));
                }
            }
            for &p in self.row(q) {
                if !in_useful[p] {
                    continue;
                }
                if let Some(d) = dist[q] {
                    dist[p] = dist[p].max(Some(d + 1));
                }
                indegree[p] -= 1;
                if indegree[p] == 0 {
                    queue.push_back(p);
                }
            }
        }
        if visited != useful.len() {
            return Err(Error::InvalidAutomaton(
                "accepted language is infinite (cycle through useful states)".into(),
            ));
        }
        Ok(best)
    }

    /// Text dump: header lines `states N`, `initial I`, `finals ...`, then
    /// one `src symbol dst` line per transition in state/alphabet order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "states {}", self.num_states());
        let _ = writeln!(out, "initial {}", self.initial);
        out.push_str("finals");
        for q in self.finals() {
            let _ = write!(out, " {q}");
        }
        out.push('\n');
        for q in 0..self.num_states() {
            for a in self.alphabet.iter() {
                let _ = writeln!(out, "{q} {} {}", self.alphabet.name(a), self.next(q, a));
            }
        }
        out
    }
}
