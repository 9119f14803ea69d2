//! Classical pattern containment for words with pairwise-distinct entries.
//!
//! A word contains a pattern σ when some subsequence is order-isomorphic to
//! σ; otherwise it avoids σ. Containment is invariant under relabeling that
//! preserves relative order, so entries need not be {1..n}.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use itertools::Itertools;
use std::fmt;

/// A permutation used as a containment template.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    values: Vec<u32>,
}

impl Pattern {
    pub fn from_values(values: Vec<u32>) -> Result<Self> {
        let p = Permutation::new(values)?;
        Ok(Self {
            values: p.values().to_vec(),
        })
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        Self {
            values: p.values().to_vec(),
        }
    }

    /// The decreasing pattern δk = k(k−1)⋯21.
    pub fn decreasing(k: usize) -> Self {
        Self {
            values: (1..=k as u32).rev().collect(),
        }
    }

    /// Parses a digit string such as "1432" (lengths up to 9).
    pub fn parse(s: &str) -> Result<Self> {
        let digits: Option<Vec<u32>> = s.chars().map(|c| c.to_digit(10)).collect();
        match digits {
            Some(values) if !values.is_empty() => Self::from_values(values),
            _ => Err(Error::NotAPermutation(format!(
                "cannot read \"{s}\" as a pattern"
            ))),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.values.iter().join(","))
        }
    }
}

/// A finite sequence of pairwise-distinct positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    entries: Vec<u32>,
}

impl Word {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.first() == Some(&0) {
            return Err(Error::NotAWord);
        }
        Ok(Self { entries })
    }

    pub(crate) fn from_distinct(entries: Vec<u32>) -> Self {
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn contains(&self, pattern: &Pattern) -> bool {
        contains_slice(&self.entries, pattern.values())
    }

    pub fn avoids(&self, pattern: &Pattern) -> bool {
        !self.contains(pattern)
    }

    /// Length of the longest strictly decreasing subsequence. Containing δk
    /// is the same as having `lds_length() >= k`.
    pub fn lds_length(&self) -> usize {
        lds_slice(&self.entries)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(" "))
    }
}

/// Backtracking subsequence matcher.
///
/// Pattern positions are matched left to right. For each pattern position the
/// nearest already-placed pattern values below and above it are precomputed,
/// so extending a partial match costs two comparisons, and any prefix that is
/// not order-isomorphic is abandoned immediately. Sized for k ≤ 5, n ≤ 12.
pub(crate) fn contains_slice(word: &[u32], pattern: &[u32]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if word.len() < k {
        return false;
    }
    // below[d] / above[d]: among pattern positions before d, the one whose
    // value is closest under / over pattern[d].
    let mut below = vec![usize::MAX; k];
    let mut above = vec![usize::MAX; k];
    for d in 1..k {
        for e in 0..d {
            if pattern[e] < pattern[d] && (below[d] == usize::MAX || pattern[e] > pattern[below[d]])
            {
                below[d] = e;
            }
            if pattern[e] > pattern[d] && (above[d] == usize::MAX || pattern[e] < pattern[above[d]])
            {
                above[d] = e;
            }
        }
    }
    let mut chosen = Vec::with_capacity(k);
    search(word, k, &below, &above, &mut chosen, 0)
}

fn search(
    word: &[u32],
    k: usize,
    below: &[usize],
    above: &[usize],
    chosen: &mut Vec<usize>,
    start: usize,
) -> bool {
    let d = chosen.len();
    if d == k {
        return true;
    }
    let need = k - d;
    for i in start..=(word.len() - need) {
        let x = word[i];
        let fits = (below[d] == usize::MAX || word[chosen[below[d]]] < x)
            && (above[d] == usize::MAX || word[chosen[above[d]]] > x);
        if fits {
            chosen.push(i);
            if search(word, k, below, above, chosen, i + 1) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Longest strictly decreasing subsequence in O(n log n), patience-style:
/// negate and run the strict-increase variant, keeping for every length the
/// smallest possible tail.
pub(crate) fn lds_slice(word: &[u32]) -> usize {
    let mut tails: Vec<i64> = Vec::new();
    for &x in word {
        let v = -i64::from(x);
        let idx = tails.partition_point(|&t| t < v);
        if idx == tails.len() {
            tails.push(v);
        } else {
            tails[idx] = v;
        }
    }
    tails.len()
}

/// All patterns of the given length avoiding both 123 and 321, in
/// lexicographic order, computed by filtering the full symmetric group.
pub fn avoiding_123_and_321(len: usize) -> Vec<Pattern> {
    let inc = Pattern {
        values: vec![1, 2, 3],
    };
    let dec = Pattern::decreasing(3);
    (1..=len as u32)
        .permutations(len)
        .filter(|w| !contains_slice(w, inc.values()) && !contains_slice(w, dec.values()))
        .map(|values| Pattern { values })
        .collect()
}

/// The length-4 instance of [`avoiding_123_and_321`]: exactly
/// {2143, 2413, 3142, 3412}.
pub fn s4_avoiding_123_and_321() -> Vec<Pattern> {
    avoiding_123_and_321(4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(entries: &[u32]) -> Word {
        Word::new(entries.to_vec()).unwrap()
    }

    fn pat(s: &str) -> Pattern {
        Pattern::parse(s).unwrap()
    }

    #[test]
    fn word_constructor_rejects_duplicates_and_zero() {
        assert_eq!(Word::new(vec![3, 1, 3]), Err(Error::NotAWord));
        assert_eq!(Word::new(vec![0, 2]), Err(Error::NotAWord));
        assert!(Word::new(vec![]).unwrap().is_empty());
        assert!(Word::new(vec![7, 2, 40]).is_ok());
    }

    #[test]
    fn containment_basics() {
        assert!(w(&[1, 4, 2, 5, 3]).contains(&pat("132")));
        assert!(w(&[1, 4, 2, 5, 3]).avoids(&pat("321")));
        assert!(w(&[1, 4, 2, 5, 3]).avoids(&pat("2143")));
        assert!(w(&[2, 1, 4, 3]).contains(&pat("2143")));
        assert!(w(&[6, 2, 9, 7]).contains(&pat("2143"))); // relabeled entries
        assert!(w(&[5, 4, 3]).contains(&pat("321")));
        assert!(w(&[1, 2]).avoids(&pat("123")));
        // empty pattern is contained in everything
        let empty = Pattern { values: vec![] };
        assert!(w(&[]).contains(&empty));
    }

    #[test]
    fn lds_edge_cases() {
        assert_eq!(w(&[]).lds_length(), 0);
        assert_eq!(w(&[7]).lds_length(), 1);
        assert_eq!(w(&[1, 2, 3]).lds_length(), 1);
        assert_eq!(w(&[3, 4, 2, 1]).lds_length(), 3);
        assert_eq!(w(&[5, 1, 4, 2, 3]).lds_length(), 3);
    }

    /// contains(w, δk) ⇔ lds_length(w) ≥ k, exhaustively over S_n for n ≤ 8.
    #[test]
    fn decreasing_pattern_matches_lds() {
        use itertools::Itertools;
        for n in 0..=8usize {
            for word in (1..=n as u32).permutations(n) {
                let lds = lds_slice(&word);
                for k in 2..=6usize {
                    assert_eq!(
                        contains_slice(&word, Pattern::decreasing(k).values()),
                        lds >= k,
                        "word {word:?}, k {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn filter_of_s4_and_neighbors() {
        let got: Vec<String> = s4_avoiding_123_and_321()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(got, vec!["2143", "2413", "3142", "3412"]);
        assert!(avoiding_123_and_321(5).is_empty());
        let s2: Vec<String> = avoiding_123_and_321(2)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(s2, vec!["12", "21"]);
    }

    #[test]
    fn pattern_parse_and_display() {
        assert_eq!(pat("1432").values(), &[1, 4, 3, 2]);
        assert_eq!(pat("1432").to_string(), "1432");
        assert!(Pattern::parse("14x2").is_err());
        assert!(Pattern::parse("").is_err());
        assert!(Pattern::parse("132").is_ok());
        assert!(Pattern::parse("143").is_err()); // not a rearrangement of 1..=3
        assert!(Pattern::parse("1442").is_err());
    }
}
