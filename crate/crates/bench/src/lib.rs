//! Fixtures shared by the benchmarks.

use seedsens_core::{ProbTransducer, Seed, SeedAlphabet, Transition};

/// Weight-11 subset seed with two `@`.
pub const SUBSET_SEED_W11: &str = "###@#_###_#@##";

/// Weight-9 spaced seed.
pub const SPACED_SEED_W9: &str = "###_#__#_#_###";

pub fn subset_seed() -> Seed {
    Seed::parse(SUBSET_SEED_W11, &SeedAlphabet::dna_subset()).expect("valid seed")
}

pub fn spaced_seed() -> Seed {
    Seed::parse(SPACED_SEED_W9, &SeedAlphabet::spaced()).expect("valid seed")
}

/// Eight hidden states over `{1, h, 0}`: four conservation levels, each with
/// a "stay" and "drift" copy. Every emitted symbol may move to two states.
pub fn eight_state_transducer() -> ProbTransducer {
    let alphabet = SeedAlphabet::dna_subset().alphabet().clone();
    let mut transitions = Vec::new();
    for q in 0..8usize {
        let level = q / 2;
        let p1 = 0.55 + 0.1 * level as f64;
        let ph = (1.0 - p1) * 0.7;
        let p0 = 1.0 - p1 - ph;
        for (symbol, p) in [(0u8, p1), (1, ph), (2, p0)] {
            transitions.push(Transition { src: q, symbol, dst: q, prob: 0.9 * p });
            transitions.push(Transition { src: q, symbol, dst: (q + 3) % 8, prob: 0.1 * p });
        }
    }
    ProbTransducer::new(alphabet, 8, 0, transitions).expect("stochastic rows")
}
