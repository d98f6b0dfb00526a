//! Line-oriented model files.
//!
//! ```text
//! alphabet 1 h 0
//! match 1
//! states 4
//! initial 0
//! trans <src> <symbol> <dst> <prob>
//! ```
//!
//! `#` starts a comment. Loading validates the transducer.

use std::fmt::Write as _;

use super::transducer::{ProbTransducer, Transition};
use crate::alphabet::{AlignmentAlphabet, MATCH_NAME};
use crate::error::{Error, Result};

pub fn parse_model(text: &str) -> Result<ProbTransducer> {
    let mut alphabet: Option<AlignmentAlphabet> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<usize> = None;
    let mut transitions = Vec::new();
    let syntax = |line: usize, message: String| Error::ModelSyntax { line, message };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().unwrap_or_default();
        let args: Vec<&str> = tokens.collect();
        let number = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| syntax(line, format!("expected a state number, found {s:?}")))
        };
        match keyword {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(syntax(line, "duplicate alphabet".into()));
                }
                alphabet = Some(
                    AlignmentAlphabet::new(args.iter().copied())
                        .map_err(|e| syntax(line, e.to_string()))?,
                );
            }
            "match" => {
                if args != [MATCH_NAME] {
                    return Err(syntax(line, format!("match symbol must be {MATCH_NAME:?}")));
                }
            }
            "states" | "initial" => {
                let [arg] = args[..] else {
                    return Err(syntax(line, format!("{keyword} takes one argument")));
                };
                let slot = if keyword == "states" {
                    &mut states
                } else {
                    &mut initial
                };
                if slot.replace(number(arg)?).is_some() {
                    return Err(syntax(line, format!("duplicate {keyword}")));
                }
            }
            "trans" => {
                let [src, sym, dst, prob] = args[..] else {
                    return Err(syntax(line, "trans takes <src> <symbol> <dst> <prob>".into()));
                };
                let ab = alphabet
                    .as_ref()
                    .ok_or_else(|| syntax(line, "trans before alphabet".into()))?;
                let symbol = ab
                    .symbol(sym)
                    .ok_or_else(|| syntax(line, format!("unknown symbol {sym:?}")))?;
                let prob: f64 = prob
                    .parse()
                    .map_err(|_| syntax(line, format!("bad probability {prob:?}")))?;
                if !(prob > 0.0 && prob <= 1.0) {
                    return Err(syntax(line, format!("probability {prob} outside (0, 1]")));
                }
                transitions.push(Transition {
                    src: number(src)?,
                    symbol,
                    dst: number(dst)?,
                    prob,
                });
            }
            other => return Err(syntax(line, format!("unknown keyword {other:?}"))),
        }
    }
    let missing = |what: &str| Error::InvalidModel(format!("missing `{what}` line"));
    let alphabet = alphabet.ok_or_else(|| missing("alphabet"))?;
    let states = states.ok_or_else(|| missing("states"))?;
    let initial = initial.ok_or_else(|| missing("initial"))?;
    let g = ProbTransducer::new_unchecked(alphabet, states, initial, transitions)?;
    let diags = g.validate();
    if !diags.is_empty() {
        let msgs: Vec<String> = diags.iter().map(ToString::to_string).collect();
        return Err(Error::InvalidModel(msgs.join("; ")));
    }
    Ok(g)
}

/// Canonical text form; probabilities use the shortest exact decimal.
pub fn write_model(g: &ProbTransducer) -> String {
    let ab = g.alphabet();
    let mut out = String::new();
    let _ = writeln!(out, "alphabet {ab}");
    let _ = writeln!(out, "match {MATCH_NAME}");
    let _ = writeln!(out, "states {}", g.num_states());
    let _ = writeln!(out, "initial {}", g.initial());
    for t in g.transitions() {
        let _ = writeln!(
            out,
            "trans {} {} {} {}",
            t.src,
            ab.name(t.symbol),
            t.dst,
            t.prob
        );
    }
    out
}
