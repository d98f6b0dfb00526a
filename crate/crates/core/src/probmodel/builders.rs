use std::collections::HashMap;

use super::transducer::{ProbTransducer, Transition, ROW_SUM_TOLERANCE};
use crate::alphabet::{AlignmentAlphabet, Symbol};
use crate::error::{Error, Result};

fn check_distribution(alphabet: &AlignmentAlphabet, probs: &[f64], what: &str) -> Result<()> {
    if probs.len() != alphabet.len() {
        return Err(Error::InvalidModel(format!(
            "{what}: {} probabilities for {} symbols",
            probs.len(),
            alphabet.len()
        )));
    }
    if probs.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
        return Err(Error::InvalidModel(format!("{what}: probability outside [0, 1]")));
    }
    let sum: f64 = probs.iter().sum();
    if (sum - 1.0).abs() > ROW_SUM_TOLERANCE {
        return Err(Error::InvalidModel(format!("{what}: probabilities sum to {sum}")));
    }
    Ok(())
}

/// One-state transducer emitting symbols independently with `probs`
/// (given in alphabet order).
pub fn bernoulli(alphabet: &AlignmentAlphabet, probs: &[f64]) -> Result<ProbTransducer> {
    check_distribution(alphabet, probs, "bernoulli")?;
    let transitions = probs
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0.0)
        .map(|(a, &prob)| Transition {
            src: 0,
            symbol: a as Symbol,
            dst: 0,
            prob,
        })
        .collect();
    ProbTransducer::new(alphabet.clone(), 1, 0, transitions)
}

/// Conditional distributions of a Markov model of order `k`.
///
/// Keys are contexts (oldest symbol first) of length `0..=k`; the shorter
/// ones describe the first `k` positions of a word.
#[derive(Clone, Debug, Default)]
pub struct MarkovTable {
    rows: HashMap<Vec<Symbol>, Vec<f64>>,
}

impl MarkovTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, context: Vec<Symbol>, probs: Vec<f64>) -> &mut Self {
        self.rows.insert(context, probs);
        self
    }

    pub fn with(mut self, context: Vec<Symbol>, probs: Vec<f64>) -> Self {
        self.set(context, probs);
        self
    }

    pub fn get(&self, context: &[Symbol]) -> Option<&[f64]> {
        self.rows.get(context).map(Vec::as_slice)
    }
}

/// Deterministic transducer for a Markov model of order `k`.
///
/// States are the contexts reachable from the empty one, numbered in
/// breadth-first order; after `k` symbols the context is the last `k`
/// symbols. Every reachable context must have a row in `table`.
pub fn markov(alphabet: &AlignmentAlphabet, order: usize, table: &MarkovTable) -> Result<ProbTransducer> {
    let mut contexts: Vec<Vec<Symbol>> = vec![Vec::new()];
    let mut index: HashMap<Vec<Symbol>, usize> = HashMap::from([(Vec::new(), 0)]);
    let mut transitions = Vec::new();
    let mut i = 0;
    while i < contexts.len() {
        let ctx = contexts[i].clone();
        let probs = table.get(&ctx).ok_or_else(|| {
            Error::InvalidModel(format!(
                "missing row for context \"{}\"",
                alphabet.format_word(&ctx)
            ))
        })?;
        check_distribution(
            alphabet,
            probs,
            &format!("context \"{}\"", alphabet.format_word(&ctx)),
        )?;
        for (a, &prob) in probs.iter().enumerate() {
            if prob == 0.0 {
                continue;
            }
            let mut next = ctx.clone();
            next.push(a as Symbol);
            if next.len() > order {
                next.remove(0);
            }
            let dst = *index.entry(next.clone()).or_insert_with(|| {
                contexts.push(next);
                contexts.len() - 1
            });
            transitions.push(Transition {
                src: i,
                symbol: a as Symbol,
                dst,
                prob,
            });
        }
        i += 1;
    }
    ProbTransducer::new(alphabet.clone(), contexts.len(), 0, transitions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::words_over;

    #[test]
    fn bernoulli_shapes() {
        let g = bernoulli(&AlignmentAlphabet::binary(), &[0.7, 0.3]).unwrap();
        assert_eq!((g.num_states(), g.transitions().len()), (1, 2));
        assert!(g.is_deterministic());

        let g = bernoulli(&AlignmentAlphabet::binary(), &[1.0, 0.0]).unwrap();
        assert_eq!(g.transitions().len(), 1);
        assert_eq!(g.word_probability(&[0; 12]), 1.0);

        let g = bernoulli(&AlignmentAlphabet::dna(), &[0.7, 0.2, 0.1]).unwrap();
        assert_eq!(g.transitions().len(), 3);

        assert!(bernoulli(&AlignmentAlphabet::binary(), &[0.7, 0.2]).is_err());
        assert!(bernoulli(&AlignmentAlphabet::binary(), &[0.7]).is_err());
    }

    #[test]
    fn order_zero_is_bernoulli() {
        let ab = AlignmentAlphabet::dna();
        let table = MarkovTable::new().with(vec![], vec![0.6, 0.3, 0.1]);
        let m = markov(&ab, 0, &table).unwrap();
        assert_eq!(m, bernoulli(&ab, &[0.6, 0.3, 0.1]).unwrap());
    }

    #[test]
    fn order_one_binary() {
        let ab = AlignmentAlphabet::binary();
        let table = MarkovTable::new()
            .with(vec![], vec![0.7, 0.3])
            .with(vec![0], vec![0.8, 0.2])
            .with(vec![1], vec![0.5, 0.5]);
        let g = markov(&ab, 1, &table).unwrap();
        assert!(g.is_deterministic());
        assert!((g.word_probability(&[0, 0]) - 0.56).abs() < 1e-15);
        assert!((g.word_probability(&[1, 0, 0]) - 0.3 * 0.5 * 0.8).abs() < 1e-15);
    }

    #[test]
    fn order_one_ternary_state_count() {
        let ab = AlignmentAlphabet::dna();
        let row = vec![0.5, 0.3, 0.2];
        let table = MarkovTable::new()
            .with(vec![], row.clone())
            .with(vec![0], row.clone())
            .with(vec![1], row.clone())
            .with(vec![2], row);
        let g = markov(&ab, 1, &table).unwrap();
        assert_eq!(g.num_states(), 4);
    }

    #[test]
    fn missing_context_is_named() {
        let ab = AlignmentAlphabet::binary();
        let table = MarkovTable::new()
            .with(vec![], vec![0.7, 0.3])
            .with(vec![0], vec![0.8, 0.2]);
        let err = markov(&ab, 1, &table).unwrap_err();
        assert!(err.to_string().contains("\"0\""), "{err}");
    }

    #[test]
    fn order_two_is_stochastic() {
        let ab = AlignmentAlphabet::binary();
        let mut table = MarkovTable::new();
        table.set(vec![], vec![0.6, 0.4]);
        for (i, ctx) in [vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
            .into_iter()
            .enumerate()
        {
            let p = 0.3 + 0.1 * i as f64;
            table.set(ctx, vec![p, 1.0 - p]);
        }
        let g = markov(&ab, 2, &table).unwrap();
        assert!(g.num_states() <= 7);
        for n in 0..=10 {
            let all = words_over(2, n);
            let p = g.language_probability(all.iter().map(Vec::as_slice));
            assert!((p - 1.0).abs() < 1e-9);
        }
    }
}
