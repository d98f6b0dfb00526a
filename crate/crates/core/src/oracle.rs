//! Brute-force reference: enumerate every word of length `n`, test for a
//! hit by sliding the seed over the word letter by letter, and weight each
//! word by its probability under the model. Shares no code with the
//! automaton pipeline.

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::probmodel::ProbTransducer;
use crate::seeds::Seed;

/// Default limit on `|A|^n`.
pub const DEFAULT_WORD_CAP: u128 = 1 << 24;

/// Does some length-`m` factor of `word` match the seed letter by letter?
pub fn hits(seed: &Seed, word: &[Symbol]) -> bool {
    let m = seed.span();
    if word.len() < m {
        return false;
    }
    (0..=word.len() - m).any(|start| {
        seed.letters()
            .iter()
            .enumerate()
            .all(|(j, letter)| letter.mask() >> word[start + j] & 1 == 1)
    })
}

/// `Σ_{w hit} P(w) / Σ_w P(w)` over all words of length `n`.
pub fn brute_force_sensitivity(seed: &Seed, n: usize, g: &ProbTransducer, cap: u128) -> Result<f64> {
    let k = g.alphabet().len();
    if g.alphabet() != seed.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: seed.alphabet().to_string(),
            right: g.alphabet().to_string(),
        });
    }
    let count = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::ResourceLimit {
            what: "number of words",
            requested: count,
            limit: cap,
        });
    }

    // Depth-first over words; forward[d] is the state distribution after the
    // first d symbols, so shared prefixes are evaluated once.
    let q = g.num_states();
    let mut forward = vec![vec![0.0f64; q]; n + 1];
    forward[0][g.initial()] = 1.0;
    let mut word: Vec<Symbol> = vec![0; n];
    let (mut hit_mass, mut total_mass) = (0.0, 0.0);
    let mut depth = 0;
    let mut choice = vec![0usize; n + 1];
    loop {
        if depth == n {
            let p: f64 = forward[n].iter().sum();
            total_mass += p;
            if hits(seed, &word) {
                hit_mass += p;
            }
            if n == 0 {
                break;
            }
            depth -= 1;
            continue;
        }
        if choice[depth] == k {
            choice[depth] = 0;
            if depth == 0 {
                break;
            }
            depth -= 1;
            continue;
        }
        let a = choice[depth] as Symbol;
        choice[depth] += 1;
        word[depth] = a;
        let (head, tail) = forward.split_at_mut(depth + 1);
        let (cur, next) = (&head[depth], &mut tail[0]);
        next.iter_mut().for_each(|x| *x = 0.0);
        for (s, &m) in cur.iter().enumerate() {
            if m == 0.0 {
                continue;
            }
            for t in g.outgoing(s).iter().filter(|t| t.symbol == a) {
                next[t.dst] += m * t.prob;
            }
        }
        depth += 1;
    }
    if total_mass <= 0.0 {
        return Err(Error::ZeroTargetProbability);
    }
    Ok(hit_mass / total_mass)
}
