//! Seed sensitivity as a ratio of two path-weight sums over products of
//! automata.

mod dp;
mod pw;
mod target;

pub use dp::{path_weight_dp, path_weight_dp_traced, DpOutcome, MassStep};
pub use pw::{pw_product, PwAutomaton, PwEdge};
pub use target::target_all_words;

use crate::automata::{product_intersection, Dfa};
use crate::error::{Error, Result};
use crate::probmodel::ProbTransducer;
use crate::seeds::{build_spi_automaton, Seed};

/// Slack allowed when checking `p_joint <= p_target`.
const ORDER_SLACK: f64 = 1e-9;

/// State counts gathered while computing a sensitivity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub target_states: usize,
    pub seed_states: usize,
    pub joint_states: usize,
    pub weighted_states: usize,
    pub steps: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SensitivityResult {
    /// Probability of the target words hit by the seed.
    pub p_joint: f64,
    /// Probability of the target language.
    pub p_target: f64,
    pub sensitivity: f64,
    pub diagnostics: Diagnostics,
}

/// A target automaton and a model, with the target probability computed
/// once so that many seeds can be evaluated against them.
#[derive(Clone, Debug)]
pub struct SensitivityContext {
    target: Dfa,
    model: ProbTransducer,
    horizon: usize,
    p_target: f64,
}

impl SensitivityContext {
    /// `target` must accept a finite language; its longest word sets the DP
    /// horizon.
    pub fn new(target: Dfa, model: ProbTransducer) -> Result<Self> {
        target.alphabet().ensure_same(model.alphabet())?;
        let horizon = target
            .longest_accepted_length()?
            .ok_or(Error::ZeroTargetProbability)?
            .max(1);
        let p_target = path_weight_dp(&pw_product(&target, &model)?, horizon)?;
        if p_target <= 0.0 {
            return Err(Error::ZeroTargetProbability);
        }
        Ok(Self {
            target,
            model,
            horizon,
            p_target,
        })
    }

    /// Context for all words of length `n`.
    pub fn all_words(model: ProbTransducer, n: usize) -> Result<Self> {
        let target = target_all_words(model.alphabet(), n)?;
        Self::new(target, model)
    }

    pub fn target(&self) -> &Dfa {
        &self.target
    }

    pub fn model(&self) -> &ProbTransducer {
        &self.model
    }

    pub fn p_target(&self) -> f64 {
        self.p_target
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn evaluate(&self, seed: &Seed) -> Result<SensitivityResult> {
        self.target.alphabet().ensure_same(seed.alphabet())?;
        let spi = build_spi_automaton(seed);
        let joint = product_intersection(&self.target, &spi)?;
        let weighted = pw_product(&joint, &self.model)?;
        let p_joint = path_weight_dp(&weighted, self.horizon)?;
        if p_joint > self.p_target + ORDER_SLACK || p_joint < 0.0 {
            return Err(Error::Invariant(format!(
                "joint probability {p_joint} exceeds target probability {}",
                self.p_target
            )));
        }
        Ok(SensitivityResult {
            p_joint,
            p_target: self.p_target,
            sensitivity: p_joint / self.p_target,
            diagnostics: Diagnostics {
                target_states: self.target.num_states(),
                seed_states: spi.num_states(),
                joint_states: joint.num_states(),
                weighted_states: weighted.num_states(),
                steps: self.horizon,
            },
        })
    }
}

/// Sensitivity `P(L_T ∩ L_π) / P(L_T)` of `seed` on the words of `target`
/// drawn from `g`.
pub fn compute_sensitivity(seed: &Seed, target: &Dfa, g: &ProbTransducer) -> Result<SensitivityResult> {
    SensitivityContext::new(target.clone(), g.clone())?.evaluate(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::AlignmentAlphabet;
    use crate::probmodel::bernoulli;
    use crate::seeds::SeedAlphabet;

    fn sens(seed: &str, n: usize) -> SensitivityResult {
        let sa = SeedAlphabet::spaced();
        let ab = sa.alphabet();
        let g = bernoulli(ab, &[0.7, 0.3]).unwrap();
        let t = target_all_words(ab, n).unwrap();
        compute_sensitivity(&Seed::parse(seed, &sa).unwrap(), &t, &g).unwrap()
    }

    #[test]
    fn frozen_values() {
        // 1 - 0.3^2
        assert!((sens("#", 2).sensitivity - 0.91).abs() < 1e-12);
        assert!((sens("##", 3).sensitivity - 0.637).abs() < 1e-12);
        assert!((sens("#_#", 4).sensitivity - 0.7399).abs() < 1e-12);
        assert!((sens("##", 4).sensitivity - 0.784).abs() < 1e-12);
    }

    #[test]
    fn diagnostics_are_filled() {
        let r = sens("#_#", 4);
        assert_eq!(r.diagnostics.target_states, 6);
        assert_eq!(r.diagnostics.seed_states, 5);
        assert_eq!(r.diagnostics.steps, 4);
        assert!(r.diagnostics.joint_states <= 6 * 5);
        assert!((r.p_target - 1.0).abs() < 1e-12);
        assert!(r.p_joint <= r.p_target);
    }

    #[test]
    fn zero_probability_target() {
        // Target {0}, model never emits 0.
        let ab = AlignmentAlphabet::binary();
        let t = Dfa::new(ab.clone(), 0, vec![false, true, false], vec![2, 1, 2, 2, 2, 2]).unwrap();
        let g = bernoulli(&ab, &[1.0, 0.0]).unwrap();
        let s = Seed::parse("#", &SeedAlphabet::spaced()).unwrap();
        assert_eq!(compute_sensitivity(&s, &t, &g).unwrap_err(), Error::ZeroTargetProbability);
    }

    #[test]
    fn mismatched_alphabets() {
        let g = bernoulli(&AlignmentAlphabet::dna(), &[0.7, 0.2, 0.1]).unwrap();
        let t = target_all_words(&AlignmentAlphabet::dna(), 4).unwrap();
        let s = Seed::parse("#", &SeedAlphabet::spaced()).unwrap();
        assert!(matches!(
            compute_sensitivity(&s, &t, &g),
            Err(Error::AlphabetMismatch { .. })
        ));
    }
}
