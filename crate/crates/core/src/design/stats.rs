use std::fmt::Write as _;

use rayon::prelude::*;

use super::enumerate::{enumerate_seeds, EnumSpec};
use crate::automata::minimize;
use crate::error::{Error, Result};
use crate::seeds::{build_spi_automaton, Seed, SeedAlphabet, DEFAULT_FRAGMENT_CAP};

/// State counts of the three automata recognizing a seed's hits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutomatonSizes {
    pub aho_corasick: usize,
    pub spi: usize,
    pub minimized: usize,
}

/// The Aho-Corasick count comes from [`Seed::aho_corasick_states`], which
/// equals the size of the built automaton; the fragment cap still applies.
pub fn automaton_sizes(seed: &Seed) -> Result<AutomatonSizes> {
    let ac = seed.aho_corasick_states();
    if seed.matched_fragment_count() > DEFAULT_FRAGMENT_CAP as u128 {
        return Err(Error::ResourceLimit {
            what: "matched fragment count",
            requested: seed.matched_fragment_count(),
            limit: DEFAULT_FRAGMENT_CAP as u128,
        });
    }
    let spi = build_spi_automaton(seed);
    let min = minimize(&spi);
    Ok(AutomatonSizes {
        aho_corasick: ac as usize,
        spi: spi.num_states(),
        minimized: min.num_states(),
    })
}

/// Average automaton sizes over one enumeration.
#[derive(Clone, Debug, PartialEq)]
pub struct StatsRow {
    pub weight: f64,
    pub seeds: usize,
    pub ac_avg: f64,
    pub spi_avg: f64,
    pub min_avg: f64,
    /// Seeds breaking `minimized <= spi <= aho_corasick`; always expected 0.
    pub order_violations: usize,
}

impl StatsRow {
    pub fn ac_ratio(&self) -> f64 {
        self.ac_avg / self.min_avg
    }

    pub fn spi_ratio(&self) -> f64 {
        self.spi_avg / self.min_avg
    }
}

pub fn automaton_stats(spec: &EnumSpec, alphabet: &SeedAlphabet) -> Result<StatsRow> {
    let e = enumerate_seeds(spec, alphabet)?;
    if let Some(reason) = e.infeasible {
        return Err(Error::EmptyEnumeration(reason));
    }
    let sizes = e
        .seeds
        .par_iter()
        .map(automaton_sizes)
        .collect::<Result<Vec<_>>>()?;
    let count = sizes.len();
    let sum = |f: fn(&AutomatonSizes) -> usize| sizes.iter().map(f).sum::<usize>() as f64;
    Ok(StatsRow {
        weight: spec.weight,
        seeds: count,
        ac_avg: sum(|s| s.aho_corasick) / count as f64,
        spi_avg: sum(|s| s.spi) / count as f64,
        min_avg: sum(|s| s.minimized) / count as f64,
        order_violations: sizes
            .iter()
            .filter(|s| !(s.minimized <= s.spi && s.spi <= s.aho_corasick))
            .count(),
    })
}

fn fmt_weight(w: f64) -> String {
    if w.fract() == 0.0 {
        format!("{w:.0}")
    } else {
        format!("{w}")
    }
}

/// Aligned table: weight, AC average and ratio, `S_π` average and ratio,
/// minimized average.
pub fn format_stats_table(rows: &[StatsRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>4}  {:>10} {:>6}  {:>10} {:>6}  {:>10}",
        "w", "ac_avg", "delta", "spi_avg", "delta", "min_avg"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:>4}  {:>10.2} {:>6.2}  {:>10.2} {:>6.2}  {:>10.2}",
            fmt_weight(r.weight),
            r.ac_avg,
            r.ac_ratio(),
            r.spi_avg,
            r.spi_ratio(),
            r.min_avg
        );
    }
    out
}

/// One `w<TAB>ac_avg<TAB>spi_avg<TAB>min_avg` line per row.
pub fn format_stats_tsv(rows: &[StatsRow]) -> String {
    rows.iter()
        .map(|r| {
            format!(
                "{}\t{:.2}\t{:.2}\t{:.2}\n",
                fmt_weight(r.weight),
                r.ac_avg,
                r.spi_avg,
                r.min_avg
            )
        })
        .collect()
}
