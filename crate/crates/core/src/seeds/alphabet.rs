use std::fmt;

use crate::alphabet::{AlignmentAlphabet, Symbol};
use crate::error::{Error, Result};

/// Glyph of the must-match letter.
pub const MATCH_GLYPH: char = '#';

/// One seed letter: a glyph standing for a set of alignment symbols that
/// always includes the match symbol.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeedLetter {
    glyph: char,
    mask: u32,
    weight: f64,
}

impl SeedLetter {
    pub fn glyph(&self) -> char {
        self.glyph
    }

    /// Bit `a` is set iff alignment symbol `a` belongs to the letter.
    pub fn mask(&self) -> u32 {
        self.mask
    }

    #[inline]
    pub fn contains(&self, a: Symbol) -> bool {
        self.mask >> a & 1 == 1
    }

    pub fn size(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Contribution to the design weight of a seed.
    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..32u8).filter(move |&a| self.contains(a))
    }
}

/// The letters available to seeds over one alignment alphabet.
#[derive(Clone, Debug, PartialEq)]
pub struct SeedAlphabet {
    alphabet: AlignmentAlphabet,
    letters: Vec<SeedLetter>,
}

impl SeedAlphabet {
    /// Builds a seed alphabet from `(glyph, symbols, weight)` triples. When the
    /// weight is `None` the default applies: 1 for `{1}`, 0 for the whole
    /// alphabet, 0.5 otherwise.
    pub fn new<I>(alphabet: AlignmentAlphabet, letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = (char, Vec<Symbol>, Option<f64>)>,
    {
        let full = if alphabet.len() == 32 {
            u32::MAX
        } else {
            (1u32 << alphabet.len()) - 1
        };
        let one = 1u32 << alphabet.match_symbol();
        let mut out: Vec<SeedLetter> = Vec::new();
        for (glyph, symbols, weight) in letters {
            if glyph.is_whitespace() || glyph.is_control() || ";=:,".contains(glyph) {
                return Err(Error::InvalidSeedAlphabet(format!("invalid glyph {glyph:?}")));
            }
            if out.iter().any(|l| l.glyph == glyph) {
                return Err(Error::InvalidSeedAlphabet(format!("duplicate glyph '{glyph}'")));
            }
            let mut mask = 0u32;
            for a in symbols {
                if a as usize >= alphabet.len() {
                    return Err(Error::InvalidSeedAlphabet(format!(
                        "letter '{glyph}' uses symbol {a} outside the alphabet"
                    )));
                }
                mask |= 1 << a;
            }
            if mask & one == 0 {
                return Err(Error::InvalidSeedAlphabet(format!(
                    "letter '{glyph}' does not contain the match symbol"
                )));
            }
            let weight = weight.unwrap_or(if mask == one {
                1.0
            } else if mask == full {
                0.0
            } else {
                0.5
            });
            if !weight.is_finite() || weight < 0.0 {
                return Err(Error::InvalidSeedAlphabet(format!(
                    "letter '{glyph}' has invalid weight {weight}"
                )));
            }
            out.push(SeedLetter {
                glyph,
                mask,
                weight,
            });
        }
        match out.iter().find(|l| l.glyph == MATCH_GLYPH) {
            Some(l) if l.mask == one => {}
            Some(_) => {
                return Err(Error::InvalidSeedAlphabet(
                    "'#' must denote exactly the match symbol".into(),
                ))
            }
            None => return Err(Error::InvalidSeedAlphabet("missing letter '#'".into())),
        }
        Ok(Self {
            alphabet,
            letters: out,
        })
    }

    /// `#=1;_=10` over `{1, 0}`.
    pub fn spaced() -> Self {
        Self::new(
            AlignmentAlphabet::binary(),
            [('#', vec![0], None), ('_', vec![0, 1], None)],
        )
        .expect("valid preset")
    }

    /// `#=1;@=1h;_=1h0` over `{1, h, 0}`.
    pub fn dna_subset() -> Self {
        Self::new(
            AlignmentAlphabet::dna(),
            [
                ('#', vec![0], None),
                ('@', vec![0, 1], None),
                ('_', vec![0, 1, 2], None),
            ],
        )
        .expect("valid preset")
    }

    /// Resolves a preset name (`spaced`, `dna-subset`) or parses a
    /// specification string such as `#=1;@=1h;_=1h0`. Each item may carry an
    /// explicit weight: `@=1h:0.5`. The alignment alphabet is the symbols in
    /// order of first appearance.
    pub fn parse(spec: &str) -> Result<Self> {
        match spec.trim() {
            "spaced" => return Ok(Self::spaced()),
            "dna-subset" => return Ok(Self::dna_subset()),
            _ => {}
        }
        let items = split_items(spec)?;
        let mut names: Vec<String> = Vec::new();
        for (_, syms, _) in &items {
            for s in tokenize(syms, None) {
                if !names.contains(&s) {
                    names.push(s);
                }
            }
        }
        let alphabet = AlignmentAlphabet::new(names)?;
        Self::from_items(alphabet, items)
    }

    /// Like [`parse`](Self::parse) but resolves symbols against a known
    /// alphabet (for example the one of a model file). Presets must match it.
    pub fn parse_with(spec: &str, alphabet: &AlignmentAlphabet) -> Result<Self> {
        let preset = match spec.trim() {
            "spaced" => Some(Self::spaced()),
            "dna-subset" => Some(Self::dna_subset()),
            _ => None,
        };
        if let Some(p) = preset {
            p.alphabet.ensure_same(alphabet)?;
            return Ok(p);
        }
        Self::from_items(alphabet.clone(), split_items(spec)?)
    }

    /// The preset matching `alphabet`, if any.
    pub fn preset_for(alphabet: &AlignmentAlphabet) -> Option<Self> {
        [Self::spaced(), Self::dna_subset()]
            .into_iter()
            .find(|p| &p.alphabet == alphabet)
    }

    fn from_items(alphabet: AlignmentAlphabet, items: Vec<(char, String, Option<f64>)>) -> Result<Self> {
        let mut letters = Vec::with_capacity(items.len());
        for (glyph, syms, weight) in items {
            let symbols = tokenize(&syms, Some(&alphabet))
                .into_iter()
                .map(|name| {
                    alphabet.symbol(&name).ok_or_else(|| {
                        Error::InvalidSeedAlphabet(format!(
                            "letter '{glyph}' uses unknown symbol {name:?}"
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            letters.push((glyph, symbols, weight));
        }
        Self::new(alphabet, letters)
    }

    pub fn alphabet(&self) -> &AlignmentAlphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[SeedLetter] {
        &self.letters
    }

    pub fn letter(&self, glyph: char) -> Option<&SeedLetter> {
        self.letters.iter().find(|l| l.glyph == glyph)
    }
}

impl fmt::Display for SeedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.alphabet.is_single_char() { "" } else { "," };
        let items: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                let syms: Vec<&str> = l.symbols().map(|a| self.alphabet.name(a)).collect();
                format!("{}={}", l.glyph, syms.join(sep))
            })
            .collect();
        f.write_str(&items.join(";"))
    }
}

fn split_items(spec: &str) -> Result<Vec<(char, String, Option<f64>)>> {
    let mut out = Vec::new();
    for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (glyph, rest) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidSeedAlphabet(format!("item {item:?} lacks '='")))?;
        let mut chars = glyph.trim().chars();
        let glyph = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => {
                return Err(Error::InvalidSeedAlphabet(format!(
                    "glyph {glyph:?} must be one character"
                )))
            }
        };
        let (syms, weight) = match rest.split_once(':') {
            Some((s, w)) => {
                let w: f64 = w.trim().parse().map_err(|_| {
                    Error::InvalidSeedAlphabet(format!("bad weight {w:?} for '{glyph}'"))
                })?;
                (s.trim().to_string(), Some(w))
            }
            None => (rest.trim().to_string(), None),
        };
        if syms.is_empty() {
            return Err(Error::InvalidSeedAlphabet(format!("letter '{glyph}' is empty")));
        }
        out.push((glyph, syms, weight));
    }
    if out.is_empty() {
        return Err(Error::InvalidSeedAlphabet("no letters".into()));
    }
    Ok(out)
}

/// Comma-separated names, or one name per character when unambiguous.
fn tokenize(syms: &str, alphabet: Option<&AlignmentAlphabet>) -> Vec<String> {
    let single = alphabet.is_none_or(AlignmentAlphabet::is_single_char);
    if syms.contains(',') || !single {
        syms.split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect()
    } else {
        syms.chars().map(String::from).collect()
    }
}
