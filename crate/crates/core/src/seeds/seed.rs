use std::fmt;

use super::alphabet::{SeedAlphabet, SeedLetter};
use crate::alphabet::{AlignmentAlphabet, Symbol};
use crate::automata::{complete_trie, Dfa, NONE};
use crate::error::{Error, Result};

/// Longest supported seed; automaton states keep prefix lengths in a `u128`.
pub const MAX_SPAN: usize = 120;

/// Default limit on the number of fragments [`Seed::matched_fragments`] expands.
pub const DEFAULT_FRAGMENT_CAP: usize = 1 << 20;

/// A seed `π_1 … π_m` over a [`SeedAlphabet`].
#[derive(Clone, Debug, PartialEq)]
pub struct Seed {
    alphabet: AlignmentAlphabet,
    letters: Vec<SeedLetter>,
}

impl Seed {
    pub fn parse(text: &str, alphabet: &SeedAlphabet) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::InvalidSeed("empty seed".into()));
        }
        let letters = text
            .chars()
            .enumerate()
            .map(|(i, c)| {
                alphabet.letter(c).copied().ok_or(Error::UnknownGlyph {
                    glyph: c,
                    position: i + 1,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_letters(alphabet.alphabet().clone(), letters)
    }

    pub fn from_letters(alphabet: AlignmentAlphabet, letters: Vec<SeedLetter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidSeed("empty seed".into()));
        }
        if letters.len() > MAX_SPAN {
            return Err(Error::InvalidSeed(format!(
                "span {} exceeds the maximum of {MAX_SPAN}",
                letters.len()
            )));
        }
        Ok(Self { alphabet, letters })
    }

    pub fn alphabet(&self) -> &AlignmentAlphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[SeedLetter] {
        &self.letters
    }

    /// Number of letters `m`.
    pub fn span(&self) -> usize {
        self.letters.len()
    }

    fn is_match_only(&self, l: &SeedLetter) -> bool {
        l.mask() == 1 << self.alphabet.match_symbol()
    }

    /// `R_π`: 1-based positions whose letter is not the must-match letter.
    pub fn non_match_positions(&self) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, l)| !self.is_match_only(l))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `r = |R_π|`.
    pub fn r(&self) -> usize {
        self.letters.iter().filter(|l| !self.is_match_only(l)).count()
    }

    /// Number of must-match letters, `m - r`.
    pub fn match_count(&self) -> usize {
        self.span() - self.r()
    }

    /// Sum of letter weights (1 for `#`, 0.5 for `@`, 0 for `_` in the presets).
    pub fn design_weight(&self) -> f64 {
        self.letters.iter().map(SeedLetter::weight).sum()
    }

    pub fn glyphs(&self) -> String {
        self.letters.iter().map(SeedLetter::glyph).collect()
    }

    /// Upper bound `(w + 1) · 2^r` on the size of the subset-seed automaton.
    pub fn state_bound(&self) -> u128 {
        (self.match_count() as u128 + 1) << self.r().min(127)
    }

    /// Does the seed match `fragment` (of length exactly `m`)?
    pub fn matches(&self, fragment: &[Symbol]) -> bool {
        fragment.len() == self.span()
            && self.letters.iter().zip(fragment).all(|(l, &a)| l.contains(a))
    }

    /// Every word `a_1 … a_m` with `a_i ∈ π_i`, in lexicographic symbol order.
    pub fn matched_fragments(&self, cap: usize) -> Result<Vec<Vec<Symbol>>> {
        let count = self.matched_fragment_count();
        if count > cap as u128 {
            return Err(Error::ResourceLimit {
                what: "matched fragment count",
                requested: count,
                limit: cap as u128,
            });
        }
        let mut out: Vec<Vec<Symbol>> = vec![Vec::with_capacity(self.span())];
        for l in &self.letters {
            let mut next = Vec::with_capacity(out.len() * l.size());
            for prefix in &out {
                for a in l.symbols() {
                    let mut w = Vec::with_capacity(self.span());
                    w.extend_from_slice(prefix);
                    w.push(a);
                    next.push(w);
                }
            }
            out = next;
        }
        Ok(out)
    }
}

impl Seed {
    /// Aho-Corasick hit automaton of the matched fragments, equal to
    /// `aho_corasick_hit_dfa(alphabet, &matched_fragments(cap)?)` without
    /// materializing the fragments.
    pub fn aho_corasick(&self, cap: usize) -> Result<Dfa> {
        let count = self.matched_fragment_count();
        if count > cap as u128 {
            return Err(Error::ResourceLimit {
                what: "matched fragment count",
                requested: count,
                limit: cap as u128,
            });
        }
        let k = self.alphabet().len();
        let mut goto = vec![NONE; k];
        let mut terminal = vec![false];
        let mut layer = vec![0usize];
        for l in &self.letters {
            let mut next = Vec::with_capacity(layer.len() * l.size());
            for &u in &layer {
                for a in l.symbols() {
                    let id = terminal.len();
                    terminal.push(false);
                    goto.extend(std::iter::repeat_n(NONE, k));
                    goto[u * k + a as usize] = id;
                    next.push(id);
                }
            }
            layer = next;
        }
        for &u in &layer {
            terminal[u] = true;
        }
        complete_trie(self.alphabet(), goto, terminal)
    }

    /// State count of [`Seed::aho_corasick`], computed without building it.
    ///
    /// All fragments have length `m`, so no proper prefix of a fragment
    /// contains one: the live states are the distinct fragment prefixes of
    /// length below `m`, and the merged final state adds one.
    pub fn aho_corasick_states(&self) -> u128 {
        let mut total = 1u128;
        let mut layer = 1u128;
        for l in &self.letters[..self.letters.len() - 1] {
            total = total.saturating_add(layer);
            layer = layer.saturating_mul(l.size() as u128);
        }
        total.saturating_add(layer)
    }

    /// Number of fragments the seed matches.
    pub fn matched_fragment_count(&self) -> u128 {
        self.letters
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.size() as u128))
            .unwrap_or(u128::MAX)
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.glyphs())
    }
}
