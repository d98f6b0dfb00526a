//! Seed alphabets, seeds and the subset-seed automaton.

mod alphabet;
mod seed;
mod spi;

pub use alphabet::{SeedAlphabet, SeedLetter, MATCH_GLYPH};
pub use seed::{Seed, DEFAULT_FRAGMENT_CAP, MAX_SPAN};
pub use spi::build_spi_automaton;
