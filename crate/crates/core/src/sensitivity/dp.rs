use super::pw::PwAutomaton;
use crate::error::{Error, Result};

/// Mass bookkeeping after one DP step.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MassStep {
    /// Mass on non-final states that can still reach a final state.
    pub live: f64,
    /// Final-state mass summed over all steps so far.
    pub accumulated: f64,
    /// Mass on non-final states that can no longer reach a final state.
    pub dead: f64,
    /// Total mass over all states at this step.
    pub total: f64,
}

#[derive(Clone, Debug)]
pub struct DpOutcome {
    pub probability: f64,
    /// Entry `i` describes the mass after `i` symbols; entry 0 is the start.
    pub steps: Vec<MassStep>,
}

/// Sum of the weights of all full paths of length at most `horizon`.
///
/// Mass starts at 1 on the initial state and advances one symbol per step;
/// at every step the mass sitting on final states is added to the result.
/// Each full path is counted once, at its last state.
pub fn path_weight_dp(w: &PwAutomaton, horizon: usize) -> Result<f64> {
    run(w, horizon, false).map(|o| o.probability)
}

/// [`path_weight_dp`] plus per-step mass accounting. When no accepted word
/// is a proper prefix of another (fixed-length targets, for instance),
/// `live + accumulated + dead` equals the starting mass at every step.
pub fn path_weight_dp_traced(w: &PwAutomaton, horizon: usize) -> Result<DpOutcome> {
    run(w, horizon, true)
}

fn run(w: &PwAutomaton, horizon: usize, trace: bool) -> Result<DpOutcome> {
    if horizon == 0 {
        return Err(Error::InvalidArgument("DP horizon must be at least 1".into()));
    }
    let n = w.num_states();
    let live_state = if trace { w.coreachable() } else { Vec::new() };
    let mut mass = vec![0.0f64; n];
    let mut next = vec![0.0f64; n];
    mass[w.initial()] = 1.0;
    let mut accumulated = 0.0;
    let mut steps = Vec::new();
    // States holding mass; avoids scanning the whole vector at every level.
    let mut active = vec![w.initial()];
    let mut queued = vec![false; n];
    let mut next_active = Vec::new();

    for step in 0..=horizon {
        for &q in &active {
            if w.is_final(q) {
                accumulated += mass[q];
            }
        }
        if trace {
            let mut s = MassStep {
                live: 0.0,
                accumulated,
                dead: 0.0,
                total: 0.0,
            };
            for &q in &active {
                s.total += mass[q];
                if w.is_final(q) {
                } else if live_state[q] {
                    s.live += mass[q];
                } else {
                    s.dead += mass[q];
                }
            }
            steps.push(s);
        }
        if step == horizon {
            break;
        }
        for &q in &active {
            let m = mass[q];
            mass[q] = 0.0;
            if m == 0.0 {
                continue;
            }
            for e in w.edges(q) {
                if !queued[e.dst] {
                    queued[e.dst] = true;
                    next_active.push(e.dst);
                }
                next[e.dst] += m * e.prob;
            }
        }
        for &q in &next_active {
            queued[q] = false;
        }
        std::mem::swap(&mut mass, &mut next);
        std::mem::swap(&mut active, &mut next_active);
        next_active.clear();
    }
    Ok(DpOutcome {
        probability: accumulated,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::AlignmentAlphabet;
    use crate::automata::{product_intersection, Dfa};
    use crate::probmodel::bernoulli;
    use crate::seeds::{build_spi_automaton, Seed, SeedAlphabet};
    use crate::sensitivity::{pw_product, target_all_words};

    fn joint(seed: &str, n: usize) -> DpOutcome {
        let sa = SeedAlphabet::spaced();
        let ab = sa.alphabet();
        let s = build_spi_automaton(&Seed::parse(seed, &sa).unwrap());
        let k = product_intersection(&target_all_words(ab, n).unwrap(), &s).unwrap();
        let g = bernoulli(ab, &[0.7, 0.3]).unwrap();
        path_weight_dp_traced(&pw_product(&k, &g).unwrap(), n).unwrap()
    }

    #[test]
    fn all_words_have_mass_one() {
        let ab = AlignmentAlphabet::binary();
        let k = product_intersection(&target_all_words(&ab, 2).unwrap(), &Dfa::universal(ab.clone()))
            .unwrap();
        let g = bernoulli(&ab, &[0.7, 0.3]).unwrap();
        let p = path_weight_dp(&pw_product(&k, &g).unwrap(), 2).unwrap();
        assert!((p - 1.0).abs() < 1e-15);
    }

    #[test]
    fn frozen_values() {
        // Brute force over 4 words: only 11 hits.
        assert!((joint("##", 2).probability - 0.49).abs() < 1e-15);
        // 111, 110, 011.
        assert!((joint("##", 3).probability - 0.637).abs() < 1e-12);
        // 16 words; the 9 misses carry 0.51^2.
        assert!((joint("#_#", 4).probability - 0.7399).abs() < 1e-12);
    }

    #[test]
    fn mass_is_conserved() {
        let out = joint("#_#", 6);
        assert_eq!(out.steps.len(), 7);
        for s in &out.steps {
            assert!((s.live + s.accumulated + s.dead - 1.0).abs() < 1e-12, "{s:?}");
            assert!((s.total - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn multi_length_target_counts_every_word() {
        // L = {1, 11} with Bernoulli(0.7): 0.7 + 0.49, a prefix-closed pair.
        let ab = AlignmentAlphabet::binary();
        let k = Dfa::new(ab.clone(), 0, vec![false, true, true, false], vec![1, 3, 2, 3, 3, 3, 3, 3])
            .unwrap();
        let g = bernoulli(&ab, &[0.7, 0.3]).unwrap();
        let p = path_weight_dp(&pw_product(&k, &g).unwrap(), 2).unwrap();
        assert!((p - 1.19).abs() < 1e-12);
    }

    #[test]
    fn zero_horizon() {
        let ab = AlignmentAlphabet::binary();
        let g = bernoulli(&ab, &[0.7, 0.3]).unwrap();
        let w = pw_product(&Dfa::universal(ab), &g).unwrap();
        assert!(path_weight_dp(&w, 0).is_err());
    }
}
