use crate::alphabet::AlignmentAlphabet;
use crate::automata::Dfa;
use crate::error::{Error, Result};

/// DFA accepting exactly the words of length `n`: levels `0..=n` (level `n`
/// final) followed by an absorbing reject sink, `n + 2` states in total.
pub fn target_all_words(alphabet: &AlignmentAlphabet, n: usize) -> Result<Dfa> {
    if n == 0 {
        return Err(Error::InvalidArgument("target length must be at least 1".into()));
    }
    Dfa::from_fn(alphabet.clone(), n + 2, 0, |q| q == n, |q, _| (q + 1).min(n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::words_over;

    #[test]
    fn accepts_exact_length() {
        let t = target_all_words(&AlignmentAlphabet::binary(), 2).unwrap();
        assert_eq!(t.num_states(), 4);
        for len in 0..=4 {
            for w in words_over(2, len) {
                assert_eq!(t.accepts(&w), len == 2);
            }
        }
        let t = target_all_words(&AlignmentAlphabet::dna(), 1).unwrap();
        assert_eq!(words_over(3, 1).iter().filter(|w| t.accepts(w)).count(), 3);
    }

    #[test]
    fn length_64_ternary() {
        let t = target_all_words(&AlignmentAlphabet::dna(), 64).unwrap();
        assert_eq!(t.num_states(), 66);
        assert_eq!(t.longest_accepted_length().unwrap(), Some(64));
    }

    #[test]
    fn zero_length_rejected() {
        assert!(target_all_words(&AlignmentAlphabet::binary(), 0).is_err());
    }
}
