//! One-line permutations, standard cycle forms, and their rotations.
//!
//! A permutation of {1..n} is stored in one-line notation. A cyclic
//! permutation (a single n-cycle) also has a *standard cycle form*
//! `(1, c2, …, cn)`: the cycle written starting from the letter 1. Reading a
//! cycle form, `π` maps each letter to the one that follows it, wrapping at
//! the end. The n cyclic rotations of the standard form, flattened to words,
//! are the other cycle forms of the same permutation.

use crate::error::{Error, Result};
use crate::patterns::Word;
use std::fmt;

fn check_rearrangement(values: &[u32], what: &str) -> Result<()> {
    let n = values.len();
    if n == 0 {
        return Err(Error::NotAPermutation(format!("{what} is empty")));
    }
    let mut seen = vec![false; n + 1];
    for &v in values {
        if v == 0 || v as usize > n {
            return Err(Error::NotAPermutation(format!(
                "{what} holds {v}, outside 1..={n}"
            )));
        }
        if seen[v as usize] {
            return Err(Error::NotAPermutation(format!("{what} repeats {v}")));
        }
        seen[v as usize] = true;
    }
    Ok(())
}

/// A permutation of {1..n} in one-line notation: entry `i` (1-based) is π(i).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        check_rearrangement(&values, "one-line word")?;
        Ok(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects n = 0
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// π(i) for 1-based i.
    pub fn apply(&self, i: u32) -> u32 {
        self.values[(i - 1) as usize]
    }

    /// The one-line word as a pattern-matching [`Word`].
    pub fn word(&self) -> Word {
        Word::from_distinct(self.values.clone())
    }

    /// True when the permutation is a single n-cycle, i.e. the orbit of 1
    /// visits every letter.
    pub fn is_cyclic(&self) -> bool {
        let n = self.len();
        let mut seen = 0usize;
        let mut at = 1u32;
        loop {
            seen += 1;
            at = self.apply(at);
            if at == 1 {
                return seen == n;
            }
            if seen > n {
                return false; // unreachable for valid data; defensive
            }
        }
    }

    /// The standard cycle form `(1, π(1), π(π(1)), …)`.
    pub fn standard_cycle_form(&self) -> Result<CycleForm> {
        if !self.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        let mut letters = Vec::with_capacity(self.len());
        let mut at = 1u32;
        for _ in 0..self.len() {
            letters.push(at);
            at = self.apply(at);
        }
        Ok(CycleForm { letters })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A standard cycle form: a rearrangement of {1..n} whose first letter is 1.
///
/// Every such sequence determines exactly one cyclic permutation, so the
/// constructor checks only the rearrangement and leading-1 invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleForm {
    letters: Vec<u32>,
}

impl CycleForm {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        check_rearrangement(&letters, "cycle form")
            .map_err(|e| Error::NotACycleForm(e.to_string()))?;
        if letters[0] != 1 {
            return Err(Error::NotACycleForm(format!(
                "must start with 1, starts with {}",
                letters[0]
            )));
        }
        Ok(Self { letters })
    }

    /// Construction for letters already known to satisfy the invariants.
    pub(crate) fn from_letters_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(letters[0] == 1 && check_rearrangement(&letters, "cf").is_ok());
        Self { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// The second letter c₂ = π(1), the refinement statistic `j`.
    /// `None` only for the singleton cycle (1).
    pub fn second(&self) -> Option<u32> {
        self.letters.get(1).copied()
    }

    /// One-line notation of the cyclic permutation this form denotes:
    /// each letter maps to its successor, the last letter back to 1.
    pub fn to_one_line(&self) -> Permutation {
        let n = self.letters.len();
        let mut values = vec![0u32; n];
        for i in 0..n {
            values[self.letters[i] as usize - 1] = self.letters[(i + 1) % n];
        }
        Permutation { values }
    }

    /// The cycle form itself, read as a word.
    pub fn word(&self) -> Word {
        Word::from_distinct(self.letters.clone())
    }

    /// All n cyclic rotations, each flattened to a word. Index 0 is the
    /// standard form itself.
    pub fn rotations(&self) -> Vec<Word> {
        let n = self.letters.len();
        (0..n)
            .map(|r| {
                let mut w = Vec::with_capacity(n);
                w.extend_from_slice(&self.letters[r..]);
                w.extend_from_slice(&self.letters[..r]);
                Word::from_distinct(w)
            })
            .collect()
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn cf(letters: &[u32]) -> CycleForm {
        CycleForm::new(letters.to_vec()).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_words() {
        assert!(matches!(
            Permutation::new(vec![1, 1, 2]),
            Err(Error::NotAPermutation(_))
        ));
        assert!(matches!(
            Permutation::new(vec![1, 5, 2]),
            Err(Error::NotAPermutation(_))
        ));
        assert!(matches!(
            Permutation::new(vec![]),
            Err(Error::NotAPermutation(_))
        ));
        assert!(matches!(
            Permutation::new(vec![0, 1]),
            Err(Error::NotAPermutation(_))
        ));
        assert!(matches!(
            CycleForm::new(vec![2, 1]),
            Err(Error::NotACycleForm(_))
        ));
        assert!(matches!(
            CycleForm::new(vec![1, 2, 2]),
            Err(Error::NotACycleForm(_))
        ));
    }

    #[test]
    fn one_line_of_cycle_form() {
        assert_eq!(cf(&[1, 3, 2, 4]).to_one_line().values(), &[3, 4, 2, 1]);
        assert_eq!(cf(&[1, 2]).to_one_line().values(), &[2, 1]);
        assert_eq!(cf(&[1]).to_one_line().values(), &[1]);
    }

    #[test]
    fn standard_cycle_form_of_cycle() {
        let p = Permutation::new(vec![3, 4, 2, 1]).unwrap();
        assert_eq!(p.standard_cycle_form().unwrap(), cf(&[1, 3, 2, 4]));
        // identity on two letters is a product of fixed points, not a 2-cycle
        let id2 = Permutation::new(vec![1, 2]).unwrap();
        assert_eq!(id2.standard_cycle_form(), Err(Error::NotCyclic));
        let two_swaps = Permutation::new(vec![2, 1, 4, 3]).unwrap();
        assert_eq!(two_swaps.standard_cycle_form(), Err(Error::NotCyclic));
        let id1 = Permutation::new(vec![1]).unwrap();
        assert!(id1.is_cyclic());
        assert_eq!(id1.standard_cycle_form().unwrap(), cf(&[1]));
    }

    #[test]
    fn rotations_of_example() {
        let r = cf(&[1, 3, 2, 4]).rotations();
        let words: Vec<&[u32]> = r.iter().map(|w| w.entries()).collect();
        assert_eq!(
            words,
            vec![
                &[1, 3, 2, 4][..],
                &[3, 2, 4, 1][..],
                &[2, 4, 1, 3][..],
                &[4, 1, 3, 2][..],
            ]
        );
    }

    /// Every sequence (1, any rearrangement of 2..n) is a valid standard
    /// cycle form, and cycle form -> one-line -> cycle form is the identity.
    #[test]
    fn round_trip_exhaustive() {
        for n in 1..=8usize {
            let mut count = 0usize;
            for rest in (2..=n as u32).permutations(n.saturating_sub(1)) {
                let mut letters = vec![1u32];
                letters.extend(rest);
                let c = CycleForm::new(letters).unwrap();
                let p = c.to_one_line();
                assert!(p.is_cyclic());
                assert_eq!(p.standard_cycle_form().unwrap(), c);
                count += 1;
            }
            let factorial: usize = (1..n).product::<usize>().max(1);
            assert_eq!(count, factorial);
        }
    }

    /// The multiset of rotation words does not depend on which rotation the
    /// cycle is read from.
    #[test]
    fn rotation_multiset_invariant_under_rerooting() {
        for n in 1..=6usize {
            for rest in (2..=n as u32).permutations(n.saturating_sub(1)) {
                let mut letters = vec![1u32];
                letters.extend(rest);
                let c = CycleForm::new(letters.clone()).unwrap();
                let mut base: Vec<Vec<u32>> =
                    c.rotations().iter().map(|w| w.entries().to_vec()).collect();
                base.sort();
                // re-root at an arbitrary rotation and rotate by hand
                let shifted: Vec<u32> = letters[2 % n..]
                    .iter()
                    .chain(&letters[..2 % n])
                    .copied()
                    .collect();
                let mut again: Vec<Vec<u32>> = (0..n)
                    .map(|r| shifted[r..].iter().chain(&shifted[..r]).copied().collect())
                    .collect();
                again.sort();
                assert_eq!(base, again);
            }
        }
    }
}
