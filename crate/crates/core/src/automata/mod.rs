//! Complete DFAs over alignment alphabets and the operations the
//! sensitivity pipeline needs on them.

mod aho_corasick;
mod dfa;
mod minimize;
mod ops;

pub use aho_corasick::aho_corasick_hit_dfa;
pub(crate) use aho_corasick::{complete_trie, NONE};
pub use dfa::{Dfa, StateId};
pub use minimize::minimize;
pub use ops::{equivalent, product_intersection};
