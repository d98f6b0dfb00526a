#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seedsens_core::{bernoulli, markov, AlignmentAlphabet, MarkovTable, ProbTransducer, Seed, SeedAlphabet, Transition};

pub fn tr(src: usize, symbol: u8, dst: usize, prob: f64) -> Transition {
    Transition { src, symbol, dst, prob }
}

pub struct NamedModel {
    pub name: &'static str,
    pub model: ProbTransducer,
}

pub fn binary_models() -> Vec<NamedModel> {
    let ab = AlignmentAlphabet::binary();
    let table = MarkovTable::new()
        .with(vec![], vec![0.7, 0.3])
        .with(vec![0], vec![0.8, 0.2])
        .with(vec![1], vec![0.5, 0.5]);
    // Two hidden conservation levels; the level may switch on any symbol.
    let hmm = ProbTransducer::new(
        ab.clone(),
        2,
        0,
        vec![
            tr(0, 0, 0, 0.72),
            tr(0, 0, 1, 0.08),
            tr(0, 1, 0, 0.15),
            tr(0, 1, 1, 0.05),
            tr(1, 0, 1, 0.45),
            tr(1, 0, 0, 0.05),
            tr(1, 1, 1, 0.40),
            tr(1, 1, 0, 0.10),
        ],
    )
    .unwrap();
    vec![
        NamedModel { name: "bernoulli(0.7,0.3)", model: bernoulli(&ab, &[0.7, 0.3]).unwrap() },
        NamedModel { name: "markov1-binary", model: markov(&ab, 1, &table).unwrap() },
        NamedModel { name: "hmm2-binary", model: hmm },
    ]
}

pub fn ternary_models() -> Vec<NamedModel> {
    let ab = AlignmentAlphabet::dna();
    let table = MarkovTable::new()
        .with(vec![], vec![0.7, 0.2, 0.1])
        .with(vec![0], vec![0.8, 0.15, 0.05])
        .with(vec![1], vec![0.5, 0.35, 0.15])
        .with(vec![2], vec![0.4, 0.3, 0.3]);
    vec![
        NamedModel { name: "bernoulli(0.7,0.2,0.1)", model: bernoulli(&ab, &[0.7, 0.2, 0.1]).unwrap() },
        NamedModel { name: "markov1-dna", model: markov(&ab, 1, &table).unwrap() },
        NamedModel { name: "hmm2-dna", model: hmm2_dna() },
    ]
}

/// Two-state nondeterministic transducer over {1, h, 0}.
pub fn hmm2_dna() -> ProbTransducer {
    ProbTransducer::new(
        AlignmentAlphabet::dna(),
        2,
        0,
        vec![
            tr(0, 0, 0, 0.70),
            tr(0, 0, 1, 0.05),
            tr(0, 1, 0, 0.15),
            tr(0, 2, 0, 0.06),
            tr(0, 2, 1, 0.04),
            tr(1, 0, 1, 0.40),
            tr(1, 0, 0, 0.10),
            tr(1, 1, 1, 0.30),
            tr(1, 2, 1, 0.20),
        ],
    )
    .unwrap()
}

/// Eight hidden states over {1, h, 0}: four conservation levels with two
/// copies each; every emission may stay or jump to another state.
pub fn nt8_dna() -> ProbTransducer {
    let mut transitions = Vec::new();
    for q in 0..8usize {
        let level = q / 2;
        let p1 = 0.55 + 0.1 * level as f64;
        let ph = (1.0 - p1) * 0.7;
        let p0 = 1.0 - p1 - ph;
        for (symbol, p) in [(0u8, p1), (1, ph), (2, p0)] {
            transitions.push(tr(q, symbol, q, 0.9 * p));
            transitions.push(tr(q, symbol, (q + 3) % 8, 0.1 * p));
        }
    }
    ProbTransducer::new(AlignmentAlphabet::dna(), 8, 0, transitions).unwrap()
}

/// Every spaced seed of span at most `max_span` starting and ending with '#'.
pub fn anchored_spaced_seeds(max_span: usize) -> Vec<Seed> {
    let sa = SeedAlphabet::spaced();
    let mut out = vec![Seed::parse("#", &sa).unwrap()];
    for span in 2..=max_span {
        for bits in 0..1u32 << (span - 2) {
            let inner: String = (0..span - 2)
                .map(|i| if bits >> i & 1 == 1 { '_' } else { '#' })
                .collect();
            out.push(Seed::parse(&format!("#{inner}#"), &sa).unwrap());
        }
    }
    out
}

/// `count` distinct random subset seeds over {#, @, _} with span at most
/// `max_span`, neither end being '_'.
pub fn sampled_subset_seeds(count: usize, max_span: usize, seed: u64) -> Vec<Seed> {
    let sa = SeedAlphabet::dna_subset();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut texts: Vec<String> = Vec::new();
    while texts.len() < count {
        let span = rng.gen_range(1..=max_span);
        let text: String = (0..span)
            .map(|i| {
                let pool: &[char] = if i == 0 || i + 1 == span { &['#', '@'] } else { &['#', '@', '_'] };
                *pool.choose(&mut rng).unwrap()
            })
            .collect();
        if !texts.contains(&text) {
            texts.push(text);
        }
    }
    texts.iter().map(|t| Seed::parse(t, &sa).unwrap()).collect()
}

/// A random stochastic transducer with `states` states, each emission
/// going to one or two random targets.
pub fn random_transducer(rng: &mut ChaCha8Rng, ab: &AlignmentAlphabet, states: usize) -> ProbTransducer {
    let mut transitions = Vec::new();
    for q in 0..states {
        let weights: Vec<f64> = (0..ab.len()).map(|_| rng.gen_range(0.05..1.0)).collect();
        let total: f64 = weights.iter().sum();
        for (a, w) in weights.iter().enumerate() {
            let p = w / total;
            let d1 = rng.gen_range(0..states);
            let d2 = rng.gen_range(0..states);
            if d1 == d2 {
                transitions.push(tr(q, a as u8, d1, p));
            } else {
                let split = rng.gen_range(0.1..0.9);
                transitions.push(tr(q, a as u8, d1, p * split));
                transitions.push(tr(q, a as u8, d2, p * (1.0 - split)));
            }
        }
    }
    // Renormalize rows exactly enough for validation.
    let mut sums = vec![0.0; states];
    for t in &transitions {
        sums[t.src] += t.prob;
    }
    for t in &mut transitions {
        t.prob /= sums[t.src];
    }
    ProbTransducer::new(ab.clone(), states, 0, transitions).unwrap()
}
