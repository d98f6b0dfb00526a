//! Parsing of flag values that the library does not parse itself.

use std::fs;

use seedsens_core::{bernoulli, parse_model, AlignmentAlphabet, ProbTransducer, SeedAlphabet};

use crate::failure::Failure;

/// `bernoulli:p1,p0`, `bernoulli:p1,ph,p0`, or a model file path.
pub fn model(spec: &str) -> Result<ProbTransducer, Failure> {
    if let Some(list) = spec.strip_prefix("bernoulli:") {
        let probs = list
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Failure::input("--model", format!("bad probability list {list:?}: {e}")))?;
        let alphabet = match probs.len() {
            2 => AlignmentAlphabet::binary(),
            3 => AlignmentAlphabet::dna(),
            n => {
                return Err(Failure::input(
                    "--model",
                    format!("bernoulli needs 2 or 3 probabilities, got {n}"),
                ))
            }
        };
        return bernoulli(&alphabet, &probs).map_err(Failure::at("--model"));
    }
    let text = fs::read_to_string(spec).map_err(|e| Failure::input("--model", format!("cannot read {spec}: {e}")))?;
    parse_model(&text).map_err(Failure::at("--model"))
}

/// Preset name or alphabet spec string.
pub fn seed_alphabet(spec: &str, alphabet: Option<&AlignmentAlphabet>) -> Result<SeedAlphabet, Failure> {
    let parsed = match spec {
        "spaced" => Ok(SeedAlphabet::spaced()),
        "dna-subset" => Ok(SeedAlphabet::dna_subset()),
        _ => match alphabet {
            Some(ab) => SeedAlphabet::parse_with(spec, ab),
            None => SeedAlphabet::parse(spec),
        },
    };
    parsed.map_err(Failure::at("--seed-alphabet"))
}

/// Seed alphabet from the flag, else the preset matching `alphabet`.
pub fn seed_alphabet_for(flag: Option<&str>, alphabet: &AlignmentAlphabet) -> Result<SeedAlphabet, Failure> {
    match flag {
        Some(spec) => {
            let sa = seed_alphabet(spec, Some(alphabet))?;
            if sa.alphabet() != alphabet {
                return Err(Failure::input(
                    "--seed-alphabet",
                    format!("alphabet {{{}}} does not match the model alphabet {{{alphabet}}}", sa.alphabet()),
                ));
            }
            Ok(sa)
        }
        None => SeedAlphabet::preset_for(alphabet).ok_or_else(|| {
            Failure::input(
                "--seed-alphabet",
                format!("no preset for model alphabet {{{alphabet}}}; pass a seed alphabet"),
            )
        }),
    }
}

/// `9`, `9,10.5` or `9-13`.
pub fn weights(spec: &str) -> Result<Vec<f64>, Failure> {
    let bad = |msg: String| Failure::input("--weight", msg);
    if let Some((lo, hi)) = spec.split_once('-') {
        let lo: usize = lo.trim().parse().map_err(|_| bad(format!("bad range start {lo:?}")))?;
        let hi: usize = hi.trim().parse().map_err(|_| bad(format!("bad range end {hi:?}")))?;
        if lo > hi {
            return Err(bad(format!("empty range {spec}")));
        }
        return Ok((lo..=hi).map(|w| w as f64).collect());
    }
    spec.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| bad(format!("bad weight {t:?}"))))
        .collect()
}

/// Absolute span, or `+k` meaning `ceil(weight) + k`.
pub fn span_max(spec: &str, weight: f64) -> Result<usize, Failure> {
    let bad = || Failure::input("--span-max", format!("expected a number or +k, got {spec:?}"));
    match spec.strip_prefix('+') {
        Some(rest) => Ok(weight.ceil() as usize + rest.parse::<usize>().map_err(|_| bad())?),
        None => spec.parse().map_err(|_| bad()),
    }
}

pub fn configure_jobs(jobs: Option<usize>) -> Result<(), Failure> {
    if let Some(j) = jobs {
        if j == 0 {
            return Err(Failure::input("--jobs", "must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(Failure::internal)?;
    }
    Ok(())
}
