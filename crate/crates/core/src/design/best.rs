use std::cmp::Ordering;

use rayon::prelude::*;

use super::enumerate::{enumerate_seeds, EnumSpec};
use crate::error::{Error, Result};
use crate::probmodel::ProbTransducer;
use crate::seeds::{Seed, SeedAlphabet};
use crate::sensitivity::SensitivityContext;

#[derive(Clone, Debug, PartialEq)]
pub struct SeedScore {
    pub seed: Seed,
    pub sensitivity: f64,
    /// Free-form label of the model the score was computed under.
    pub model_id: String,
    pub target_length: usize,
}

#[derive(Clone, Debug)]
pub struct DesignReport {
    /// Best first; at most the requested number of entries.
    pub top: Vec<SeedScore>,
    pub evaluated: usize,
}

impl DesignReport {
    pub fn best(&self) -> &SeedScore {
        &self.top[0]
    }
}

/// Higher sensitivity first, then the smaller glyph string.
pub fn rank(a: &SeedScore, b: &SeedScore) -> Ordering {
    b.sensitivity
        .total_cmp(&a.sensitivity)
        .then_with(|| a.seed.glyphs().cmp(&b.seed.glyphs()))
}

/// Scores every seed against `ctx` in parallel and keeps the `top` best.
pub fn rank_seeds(seeds: &[Seed], ctx: &SensitivityContext, model_id: &str, top: usize) -> Result<DesignReport> {
    let mut scores = seeds
        .par_iter()
        .map(|seed| {
            ctx.evaluate(seed).map(|r| SeedScore {
                seed: seed.clone(),
                sensitivity: r.sensitivity,
                model_id: model_id.to_string(),
                target_length: ctx.horizon(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if scores.is_empty() {
        return Err(Error::EmptyEnumeration("no seeds to rank".into()));
    }
    scores.sort_by(rank);
    scores.truncate(top.max(1));
    Ok(DesignReport {
        top: scores,
        evaluated: seeds.len(),
    })
}

/// Most sensitive seed of `spec` on all words of length `n` under `g`.
pub fn best_seed(
    spec: &EnumSpec,
    alphabet: &SeedAlphabet,
    g: &ProbTransducer,
    model_id: &str,
    n: usize,
    top: usize,
) -> Result<DesignReport> {
    let e = enumerate_seeds(spec, alphabet)?;
    if let Some(reason) = e.infeasible {
        return Err(Error::EmptyEnumeration(reason));
    }
    let ctx = SensitivityContext::all_words(g.clone(), n)?;
    rank_seeds(&e.seeds, &ctx, model_id, top)
}
