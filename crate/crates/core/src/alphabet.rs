//! Alignment alphabets.
//!
//! An alignment is a word over a small alphabet describing one column of a
//! gapless pairwise comparison each (match, transition, transversion, ...).
//! Every alphabet carries the designated match symbol `1`.

use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol inside its [`AlignmentAlphabet`].
pub type Symbol = u8;

/// Largest supported alphabet; letter subsets are stored as `u32` masks.
pub const MAX_ALPHABET: usize = 32;

/// Name of the match symbol.
pub const MATCH_NAME: &str = "1";

const RESERVED: &[char] = &['#', ',', ';', '=', ':'];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlignmentAlphabet {
    symbols: Vec<String>,
    match_index: usize,
}

impl AlignmentAlphabet {
    /// Builds an alphabet from symbol names in order. One of them must be `1`.
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("no symbols".into()));
        }
        if symbols.len() > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet(format!(
                "{} symbols, at most {MAX_ALPHABET} supported",
                symbols.len()
            )));
        }
        for (i, name) in symbols.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlphabet(format!("symbol {i} is empty")));
            }
            if name
                .chars()
                .any(|c| c.is_whitespace() || c.is_control() || RESERVED.contains(&c))
            {
                return Err(Error::InvalidAlphabet(format!(
                    "symbol {name:?} contains a reserved character"
                )));
            }
            if symbols[..i].contains(name) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {name:?}")));
            }
        }
        let match_index = symbols
            .iter()
            .position(|s| s == MATCH_NAME)
            .ok_or_else(|| Error::InvalidAlphabet("missing match symbol \"1\"".into()))?;
        Ok(Self {
            symbols,
            match_index,
        })
    }

    /// Match/mismatch alphabet `{1, 0}`.
    pub fn binary() -> Self {
        Self::new(["1", "0"]).expect("valid preset")
    }

    /// Match/transition/transversion alphabet `{1, h, 0}`.
    pub fn dna() -> Self {
        Self::new(["1", "h", "0"]).expect("valid preset")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn match_symbol(&self) -> Symbol {
        self.match_index as Symbol
    }

    pub fn name(&self, symbol: Symbol) -> &str {
        &self.symbols[symbol as usize]
    }

    pub fn symbol(&self, name: &str) -> Option<Symbol> {
        self.symbols
            .iter()
            .position(|s| s == name)
            .map(|i| i as Symbol)
    }

    /// Iterates over all symbols in alphabet order.
    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.symbols.len()).map(|i| i as Symbol)
    }

    /// True when every symbol name is a single character, so words can be
    /// written without separators.
    pub fn is_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a word: one character per symbol for single-character
    /// alphabets, otherwise comma or whitespace separated names.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Symbol>> {
        let lookup = |tok: &str| {
            self.symbol(tok)
                .ok_or_else(|| Error::InvalidWord(format!("unknown symbol {tok:?}")))
        };
        if self.is_single_char() && !text.contains([',', ' ']) {
            let mut buf = [0u8; 4];
            text.chars().map(|c| lookup(c.encode_utf8(&mut buf))).collect()
        } else {
            text.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(lookup)
                .collect()
        }
    }

    pub fn format_word(&self, word: &[Symbol]) -> String {
        let sep = if self.is_single_char() { "" } else { "," };
        word.iter()
            .map(|&a| self.name(a))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub(crate) fn ensure_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for AlignmentAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols.join(" "))
    }
}
