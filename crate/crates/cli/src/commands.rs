use std::fmt::Write as _;

use seedsens_core::design::{automaton_stats, best_seed, format_stats_table, format_stats_tsv, EnumSpec};
use seedsens_core::oracle::{brute_force_sensitivity, DEFAULT_WORD_CAP};
use seedsens_core::seeds::DEFAULT_FRAGMENT_CAP;
use seedsens_core::{build_spi_automaton, minimize, ErrorKind, Seed, SeedAlphabet, SensitivityContext};

use crate::failure::Failure;
use crate::input;
use crate::{AutomatonKind, DesignArgs, DumpArgs, ModeArg, SensArgs, StatsArgs};

/// Largest allowed disagreement between the DP and the brute-force oracle.
const ORACLE_TOLERANCE: f64 = 1e-9;

pub fn sens(a: SensArgs) -> Result<String, Failure> {
    let model = a.model.as_deref().map(input::model).transpose()?;
    let sa = match (&model, a.seed_alphabet.as_deref()) {
        (Some(g), flag) => input::seed_alphabet_for(flag, g.alphabet())?,
        (None, Some(spec)) => input::seed_alphabet(spec, None)?,
        (None, None) => SeedAlphabet::spaced(),
    };
    let seed = Seed::parse(&a.seed, &sa).map_err(Failure::at("--seed"))?;
    let model = model.ok_or_else(|| Failure::input("--model", "required"))?;
    let n = a.length.ok_or_else(|| Failure::input("--length", "required"))?;

    let ctx = SensitivityContext::all_words(model.clone(), n).map_err(Failure::at("--length"))?;
    let r = ctx.evaluate(&seed).map_err(Failure::at("--seed"))?;
    let mut out = format!("{:.6}\n", r.sensitivity);
    if a.verbose {
        let d = r.diagnostics;
        writeln!(out, "p_joint {:.12}", r.p_joint).unwrap();
        writeln!(out, "p_target {:.12}", r.p_target).unwrap();
        writeln!(
            out,
            "states target {} seed {} joint {} weighted {}",
            d.target_states, d.seed_states, d.joint_states, d.weighted_states
        )
        .unwrap();
        writeln!(out, "steps {}", d.steps).unwrap();
    }
    if a.oracle {
        match brute_force_sensitivity(&seed, n, &model, DEFAULT_WORD_CAP) {
            Ok(bf) => {
                writeln!(out, "oracle {bf:.6}").unwrap();
                if (bf - r.sensitivity).abs() > ORACLE_TOLERANCE {
                    return Err(Failure::internal(format!(
                        "{out}oracle disagrees: dp {} vs brute force {bf}",
                        r.sensitivity
                    )));
                }
            }
            Err(e) if e.kind() == ErrorKind::Resource => eprintln!("seedsens: oracle skipped: {e}"),
            Err(e) => return Err(Failure::at("--oracle")(e)),
        }
    }
    Ok(out)
}

fn enum_spec(mode: ModeArg, weight: f64, span_max: usize, at: usize, anchored: bool) -> Result<EnumSpec, Failure> {
    let spec = match mode {
        ModeArg::Spaced => {
            if weight.fract() != 0.0 || weight < 0.0 {
                return Err(Failure::input("--weight", format!("spaced seeds need an integer weight, got {weight}")));
            }
            EnumSpec::spaced(weight as usize, span_max)
        }
        ModeArg::Subset => EnumSpec::subset(weight, at, span_max),
    };
    let spec = spec.with_anchor(anchored);
    match spec.infeasibility() {
        Some(reason) => Err(Failure::input("--weight", reason)),
        None => Ok(spec),
    }
}

fn default_seed_alphabet(mode: ModeArg) -> SeedAlphabet {
    match mode {
        ModeArg::Spaced => SeedAlphabet::spaced(),
        ModeArg::Subset => SeedAlphabet::dna_subset(),
    }
}

pub fn design(a: DesignArgs) -> Result<String, Failure> {
    input::configure_jobs(a.jobs)?;
    let model = input::model(&a.model)?;
    let sa = input::seed_alphabet_for(a.seed_alphabet.as_deref(), model.alphabet())?;
    let span = input::span_max(&a.span_max, a.weight)?;
    let spec = enum_spec(a.mode, a.weight, span, a.at, !a.no_anchor)?;
    if a.top == 0 {
        return Err(Failure::input("--top", "must be at least 1"));
    }
    let report = best_seed(&spec, &sa, &model, &a.model, a.length, a.top).map_err(Failure::at("--length"))?;
    let mut out = String::new();
    for s in &report.top {
        let sep = if a.tsv { '\t' } else { ' ' };
        writeln!(out, "{}{sep}{:.6}", s.seed, s.sensitivity).unwrap();
    }
    Ok(out)
}

pub fn stats(a: StatsArgs) -> Result<String, Failure> {
    input::configure_jobs(a.jobs)?;
    let sa = match a.seed_alphabet.as_deref() {
        Some(spec) => input::seed_alphabet(spec, None)?,
        None => default_seed_alphabet(a.mode),
    };
    let mut rows = Vec::new();
    for w in input::weights(&a.weight)? {
        let span = input::span_max(&a.span_max, w)?;
        let spec = enum_spec(a.mode, w, span, a.at, !a.no_anchor)?;
        rows.push(automaton_stats(&spec, &sa).map_err(Failure::at("--seed-alphabet"))?);
    }
    Ok(if a.tsv {
        format_stats_tsv(&rows)
    } else {
        format_stats_table(&rows)
    })
}

pub fn dump(a: DumpArgs) -> Result<String, Failure> {
    let sa = match a.seed_alphabet.as_deref() {
        Some(spec) => input::seed_alphabet(spec, None)?,
        None if a.seed.contains('@') => SeedAlphabet::dna_subset(),
        None => SeedAlphabet::spaced(),
    };
    let seed = Seed::parse(&a.seed, &sa).map_err(Failure::at("--seed"))?;
    let dfa = match a.automaton {
        AutomatonKind::Spi => build_spi_automaton(&seed),
        AutomatonKind::Min => minimize(&build_spi_automaton(&seed)),
        AutomatonKind::Ac => seed.aho_corasick(DEFAULT_FRAGMENT_CAP).map_err(Failure::at("--seed"))?,
    };
    Ok(dfa.dump())
}
