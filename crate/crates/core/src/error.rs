use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("alphabet mismatch: [{left}] vs [{right}]")]
    AlphabetMismatch { left: String, right: String },
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("unknown seed glyph '{glyph}' at position {position}")]
    UnknownGlyph { glyph: char, position: usize },
    #[error("invalid seed alphabet: {0}")]
    InvalidSeedAlphabet(String),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("invalid pattern set: {0}")]
    InvalidPatterns(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("model line {line}: {message}")]
    ModelSyntax { line: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{what} ({requested}) exceeds the limit of {limit}")]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        limit: u128,
    },
    #[error("target language has zero probability")]
    ZeroTargetProbability,
    #[error("no seed satisfies the enumeration constraints: {0}")]
    EmptyEnumeration(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Coarse classification used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Resource,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ResourceLimit { .. } => ErrorKind::Resource,
            Error::Invariant(_) => ErrorKind::Internal,
            _ => ErrorKind::Input,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
