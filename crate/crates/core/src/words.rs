//! Cycle sequences: the positive words that close up into clockwise
//! simple cycles in the Farey graph.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::path::ItinerarySpec;

/// True when the word is a cycle sequence: the itinerary of a clockwise
/// simple closed path. Equivalently, a quiddity cycle of a positive
/// frieze with its final term removed.
///
/// Nonpositive entries rule the word out immediately.
pub fn is_cycle_sequence(word: &[BigInt]) -> bool {
    if word.is_empty() || word.iter().any(|e| !e.is_positive()) {
        return false;
    }
    let spec = ItinerarySpec {
        left_period: Vec::new(),
        core: word.to_vec(),
        right_period: Vec::new(),
    };
    let n = word.len() as i64 + 1;
    let path = match spec.realize(0, n) {
        Ok(p) => p,
        Err(_) => return false,
    };
    path.is_clockwise_simple_closed().unwrap_or(false)
}

/// True when some contiguous subword is a cycle sequence.
///
/// A bi-infinite sequence is acyclic when no window of it contains a
/// cycle sequence; this checks one window. Naive quadratic scan over
/// subwords, which is fine at the lengths this library handles.
pub fn contains_cycle_sequence(word: &[BigInt]) -> bool {
    let n = word.len();
    (0..n).any(|i| (i + 2..=n).any(|j| is_cycle_sequence(&word[i..j])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn heptagon_rotations_give_cycle_sequences() {
        assert!(is_cycle_sequence(&word(&[1, 2, 2, 3, 1, 2])));
        assert!(is_cycle_sequence(&word(&[2, 2, 3, 1, 2, 4])));
    }

    #[test]
    fn triangle_word_is_a_cycle_sequence() {
        assert!(is_cycle_sequence(&word(&[1, 1])));
    }

    #[test]
    fn non_closing_words_are_not_cycle_sequences() {
        assert!(!is_cycle_sequence(&word(&[2, 2])));
        assert!(!is_cycle_sequence(&word(&[3, 1, 2])));
        assert!(!is_cycle_sequence(&word(&[1])));
        assert!(!is_cycle_sequence(&word(&[])));
    }

    #[test]
    fn nonpositive_entries_disqualify() {
        assert!(!is_cycle_sequence(&word(&[1, 0, 1])));
        assert!(!is_cycle_sequence(&word(&[-1, -1])));
    }

    #[test]
    fn containment_scan() {
        assert!(contains_cycle_sequence(&word(&[
            8, 8, 1, 2, 2, 3, 1, 2, 8, 8
        ])));
        assert!(!contains_cycle_sequence(&word(&[8, 8, 8, 8, 8])));
        assert!(!contains_cycle_sequence(&word(&[3, 1, 2])));
        // Every cycle sequence has an entry 1, so words with all entries
        // at least 2 never contain one.
        assert!(!contains_cycle_sequence(&word(&[2, 2, 2, 2, 2, 2, 2])));
        assert!(contains_cycle_sequence(&word(&[5, 1, 1, 5])));
    }
}
