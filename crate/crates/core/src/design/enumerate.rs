use crate::error::{Error, Result};
use crate::seeds::{Seed, SeedAlphabet, MATCH_GLYPH};

/// Glyph for the letter between `#` and `_` in subset mode.
pub const PARTIAL_GLYPH: char = '@';
/// Glyph for the letter accepting every symbol.
pub const JOKER_GLYPH: char = '_';

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Letters `#` and `_`.
    Spaced,
    /// Letters `#`, `@` and `_`, with a fixed number of `@`.
    Subset,
}

/// Which seeds to enumerate.
#[derive(Clone, Debug, PartialEq)]
pub struct EnumSpec {
    pub mode: Mode,
    /// Target design weight (`#` = 1, `@` = 0.5, `_` = 0).
    pub weight: f64,
    pub max_span: usize,
    /// Number of `@` letters (subset mode only).
    pub at_count: usize,
    /// Forbid `_` as the first or last letter.
    pub anchored: bool,
}

impl EnumSpec {
    pub fn spaced(weight: usize, max_span: usize) -> Self {
        Self {
            mode: Mode::Spaced,
            weight: weight as f64,
            max_span,
            at_count: 0,
            anchored: true,
        }
    }

    pub fn subset(weight: f64, at_count: usize, max_span: usize) -> Self {
        Self {
            mode: Mode::Subset,
            weight,
            max_span,
            at_count,
            anchored: true,
        }
    }

    pub fn with_anchor(mut self, anchored: bool) -> Self {
        self.anchored = anchored;
        self
    }

    /// Number of `@` letters actually used.
    fn partial_count(&self) -> usize {
        match self.mode {
            Mode::Spaced => 0,
            Mode::Subset => self.at_count,
        }
    }

    /// Number of `#` letters implied by the weight, or why there is none.
    pub fn match_count(&self) -> std::result::Result<usize, String> {
        let at = self.partial_count();
        let hashes = self.weight - 0.5 * at as f64;
        if !self.weight.is_finite() || self.weight < 1.0 {
            return Err(format!("weight {} is below 1", self.weight));
        }
        if hashes < 0.0 || hashes.fract() != 0.0 {
            return Err(format!(
                "weight {} cannot be written with {at} '@' letters",
                self.weight
            ));
        }
        Ok(hashes as usize)
    }

    /// Shortest span reaching the weight.
    pub fn min_span(&self) -> std::result::Result<usize, String> {
        Ok(self.match_count()? + self.partial_count())
    }

    /// `None` when feasible, otherwise the reason.
    pub fn infeasibility(&self) -> Option<String> {
        match self.min_span() {
            Err(e) => Some(e),
            Ok(0) => Some("seed would be empty".into()),
            Ok(s) if s > self.max_span => Some(format!(
                "weight {} needs span {s} but max span is {}",
                self.weight, self.max_span
            )),
            Ok(_) => None,
        }
    }
}

/// Seeds meeting a spec, sorted by glyph string.
#[derive(Clone, Debug)]
pub struct SeedEnumeration {
    pub seeds: Vec<Seed>,
    /// Set when the spec admits no seed at all.
    pub infeasible: Option<String>,
}

/// Glyph strings of all seeds meeting `spec`, in lexicographic order.
pub fn enumerate_glyphs(spec: &EnumSpec) -> std::result::Result<Vec<String>, String> {
    if let Some(reason) = spec.infeasibility() {
        return Err(reason);
    }
    let hashes = spec.match_count()?;
    let at = spec.partial_count();
    let mut out = Vec::new();
    let mut buf = String::new();
    for span in spec.min_span()?..=spec.max_span {
        let jokers = span - hashes - at;
        place(&mut buf, span, hashes, at, jokers, spec.anchored, &mut out);
    }
    out.sort_unstable();
    Ok(out)
}

fn place(
    buf: &mut String,
    span: usize,
    hashes: usize,
    at: usize,
    jokers: usize,
    anchored: bool,
    out: &mut Vec<String>,
) {
    let pos = buf.len();
    if pos == span {
        out.push(buf.clone());
        return;
    }
    let at_end = pos == 0 || pos + 1 == span;
    for (glyph, left) in [(MATCH_GLYPH, hashes), (PARTIAL_GLYPH, at), (JOKER_GLYPH, jokers)] {
        if left == 0 || (glyph == JOKER_GLYPH && anchored && at_end) {
            continue;
        }
        buf.push(glyph);
        match glyph {
            MATCH_GLYPH => place(buf, span, hashes - 1, at, jokers, anchored, out),
            PARTIAL_GLYPH => place(buf, span, hashes, at - 1, jokers, anchored, out),
            _ => place(buf, span, hashes, at, jokers - 1, anchored, out),
        }
        buf.pop();
    }
}

/// Parses every seed meeting `spec` against `alphabet`, which must define
/// the glyphs the mode uses.
pub fn enumerate_seeds(spec: &EnumSpec, alphabet: &SeedAlphabet) -> Result<SeedEnumeration> {
    let needed: &[char] = match spec.mode {
        Mode::Spaced => &[MATCH_GLYPH, JOKER_GLYPH],
        Mode::Subset => &[MATCH_GLYPH, PARTIAL_GLYPH, JOKER_GLYPH],
    };
    if let Some(&g) = needed.iter().find(|&&g| alphabet.letter(g).is_none()) {
        return Err(Error::InvalidSeedAlphabet(format!(
            "enumeration needs letter '{g}' in the seed alphabet"
        )));
    }
    match enumerate_glyphs(spec) {
        Err(reason) => Ok(SeedEnumeration {
            seeds: Vec::new(),
            infeasible: Some(reason),
        }),
        Ok(glyphs) => Ok(SeedEnumeration {
            seeds: glyphs
                .iter()
                .map(|g| Seed::parse(g, alphabet))
                .collect::<Result<_>>()?,
            infeasible: None,
        }),
    }
}
