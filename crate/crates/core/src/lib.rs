//! Sensitivity of spaced and subset seeds.
//!
//! Three automata describe a sensitivity question: a DFA for the target
//! alignments, a probability transducer for their distribution, and a DFA
//! for the alignments a seed hits. The sensitivity is the probability of
//! the intersection of the two languages divided by the probability of the
//! targets, and both probabilities are path-weight sums over the product of
//! a DFA with the transducer.
//!
//! ```
//! use seedsens_core::{bernoulli, compute_sensitivity, target_all_words, Seed, SeedAlphabet};
//!
//! let alphabet = SeedAlphabet::spaced();
//! let seed = Seed::parse("##", &alphabet).unwrap();
//! let model = bernoulli(alphabet.alphabet(), &[0.7, 0.3]).unwrap();
//! let target = target_all_words(alphabet.alphabet(), 3).unwrap();
//! let r = compute_sensitivity(&seed, &target, &model).unwrap();
//! assert!((r.sensitivity - 0.637).abs() < 1e-12);
//! ```

pub mod alphabet;
pub mod automata;
pub mod design;
pub mod error;
pub mod oracle;
pub mod probmodel;
pub mod seeds;
pub mod sensitivity;

#[cfg(test)]
mod testutil;

pub use alphabet::{AlignmentAlphabet, Symbol};
pub use automata::{aho_corasick_hit_dfa, equivalent, minimize, product_intersection, Dfa, StateId};
pub use error::{Error, ErrorKind, Result};
pub use probmodel::{bernoulli, markov, parse_model, write_model, MarkovTable, ProbTransducer, Transition};
pub use seeds::{build_spi_automaton, Seed, SeedAlphabet, SeedLetter};
pub use sensitivity::{
    compute_sensitivity, path_weight_dp, pw_product, target_all_words, PwAutomaton, SensitivityContext,
    SensitivityResult,
};
