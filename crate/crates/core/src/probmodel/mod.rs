//! Probability transducers and the common models built on them.

mod builders;
mod format;
mod transducer;

pub use builders::{bernoulli, markov, MarkovTable};
pub use format::{parse_model, write_model};
pub use transducer::{Diagnostic, ProbTransducer, Transition, ROW_SUM_TOLERANCE};
