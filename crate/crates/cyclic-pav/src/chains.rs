//! Chain covers and antichains for the position/value order of a permutation.
//!
//! Positions i, j of π satisfy i ≤ j in the order exactly when i ≤ j and
//! π(i) ≤ π(j). Chains of this poset are increasing subsequences, antichains
//! are decreasing subsequences, and Dilworth's theorem makes the minimum
//! number of chains covering all positions equal to the longest decreasing
//! subsequence. An explicit small chain cover therefore certifies that π
//! avoids the decreasing pattern one longer than the cover.

use crate::patterns::lds_slice;
use crate::perm::Permutation;

/// A partition of the positions {1..n} into chains (1-based, each listed in
/// increasing position order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCover {
    chains: Vec<Vec<u32>>,
}

impl ChainCover {
    pub fn new(chains: Vec<Vec<u32>>) -> Self {
        Self { chains }
    }

    pub fn chains(&self) -> &[Vec<u32>] {
        &self.chains
    }

    pub fn size(&self) -> usize {
        self.chains.len()
    }
}

/// Size of the largest antichain = length of the longest strictly decreasing
/// subsequence of the one-line word.
pub fn max_antichain_size(p: &Permutation) -> usize {
    lds_slice(p.values())
}

/// Greedy patience partition into increasing chains: each position is placed
/// on the chain whose current last value is the largest one below its own;
/// a new chain opens when no chain qualifies. Chain last-values stay sorted
/// in decreasing order, so the placement is a binary search, the procedure is
/// deterministic, and the number of chains produced equals
/// [`max_antichain_size`] (Dilworth).
pub fn min_chain_cover(p: &Permutation) -> ChainCover {
    let mut tops: Vec<u32> = Vec::new(); // current last value per chain, decreasing
    let mut chains: Vec<Vec<u32>> = Vec::new();
    for (idx0, &v) in p.values().iter().enumerate() {
        let position = (idx0 + 1) as u32;
        let slot = tops.partition_point(|&t| t > v);
        if slot == tops.len() {
            tops.push(v);
            chains.push(vec![position]);
        } else {
            tops[slot] = v;
            chains[slot].push(position);
        }
    }
    ChainCover { chains }
}

/// Checks that the cover is a partition of {1..n} into nonempty chains, each
/// increasing in position (as listed) and in value.
pub fn verify_chain_cover(p: &Permutation, cover: &ChainCover) -> bool {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    let mut covered = 0usize;
    for chain in cover.chains() {
        if chain.is_empty() {
            return false;
        }
        for (i, &pos) in chain.iter().enumerate() {
            if pos == 0 || pos as usize > n || seen[pos as usize] {
                return false;
            }
            seen[pos as usize] = true;
            covered += 1;
            if i > 0 {
                let prev = chain[i - 1];
                if prev >= pos || p.apply(prev) >= p.apply(pos) {
                    return false;
                }
            }
        }
    }
    covered == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn perm(values: &[u32]) -> Permutation {
        Permutation::new(values.to_vec()).unwrap()
    }

    #[test]
    fn greedy_cover_of_reverse_example() {
        let p = perm(&[3, 4, 2, 1]);
        let cover = min_chain_cover(&p);
        assert_eq!(cover.chains(), &[vec![1, 2], vec![3], vec![4]]);
        assert!(verify_chain_cover(&p, &cover));
        assert_eq!(cover.size(), 3);
        assert_eq!(max_antichain_size(&p), 3);
    }

    #[test]
    fn verifier_rejects_defects() {
        let p = perm(&[2, 1, 3]);
        // not a partition: 2 missing
        assert!(!verify_chain_cover(&p, &ChainCover::new(vec![vec![1, 3]])));
        // duplicate position
        assert!(!verify_chain_cover(
            &p,
            &ChainCover::new(vec![vec![1, 3], vec![2], vec![2]])
        ));
        // decreasing values inside a chain: positions 1,2 carry values 2,1
        assert!(!verify_chain_cover(
            &p,
            &ChainCover::new(vec![vec![1, 2], vec![3]])
        ));
        // positions out of order
        assert!(!verify_chain_cover(
            &p,
            &ChainCover::new(vec![vec![3, 1], vec![2]])
        ));
        // empty chain
        assert!(!verify_chain_cover(
            &p,
            &ChainCover::new(vec![vec![1, 3], vec![2], vec![]])
        ));
        // out-of-range position
        assert!(!verify_chain_cover(
            &p,
            &ChainCover::new(vec![vec![2], vec![1], vec![4]])
        ));
        // a correct cover passes
        assert!(verify_chain_cover(
            &p,
            &ChainCover::new(vec![vec![1, 3], vec![2]])
        ));
    }

    /// Dilworth identity on all of S_n for small n; the acceptance suite
    /// extends this to n = 7.
    #[test]
    fn dilworth_identity_exhaustive() {
        for n in 1..=6usize {
            for values in (1..=n as u32).permutations(n) {
                let p = Permutation::new(values).unwrap();
                let cover = min_chain_cover(&p);
                assert!(verify_chain_cover(&p, &cover));
                assert_eq!(cover.size(), max_antichain_size(&p));
            }
        }
    }

    /// A cover found by the greedy procedure never beats the antichain bound
    /// (no cover can: each antichain element needs its own chain).
    #[test]
    fn no_small_cover_below_antichain() {
        let p = perm(&[5, 1, 4, 2, 3]);
        assert_eq!(max_antichain_size(&p), 3);
        let cover = min_chain_cover(&p);
        assert_eq!(cover.size(), 3);
        assert!(verify_chain_cover(&p, &cover));
    }
}
