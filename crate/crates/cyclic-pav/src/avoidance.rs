//! Membership machinery for the enumerated class: permutations of {1..n}
//! forming a single n-cycle, whose one-line notation avoids the decreasing
//! pattern δk, and all of whose cycle-form rotations avoid a length-4
//! pattern τ.
//!
//! For τ = 1432 the rotation condition collapses to a property of the
//! standard cycle form alone: every rotation avoids 1432 exactly when the
//! standard form, read as a word, avoids both 321 and 2143. Both routes are
//! exposed so the equivalence itself stays testable.

use crate::error::{Error, Result};
use crate::patterns::{self, Pattern};
use crate::perm::CycleForm;

/// A class to enumerate: size n, optional one-line bound k ≥ 3 (`None`
/// drops the δk condition), and the length-4 rotation pattern τ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassQuery {
    pub n: usize,
    pub k: Option<usize>,
    pub tau: Pattern,
}

impl ClassQuery {
    pub fn new(n: usize, k: Option<usize>, tau: Pattern) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("class size n must be positive".into()));
        }
        if let Some(k) = k {
            if k < 3 {
                return Err(Error::Domain(format!("k must be at least 3, got {k}")));
            }
        }
        if tau.len() != 4 {
            return Err(Error::Domain(format!(
                "tau must have length 4, got {}",
                tau.len()
            )));
        }
        Ok(Self { n, k, tau })
    }

    /// Shorthand for the class studied throughout: τ = 1432.
    pub fn with_1432(n: usize, k: Option<usize>) -> Result<Self> {
        Self::new(n, k, Pattern::parse("1432").expect("valid pattern"))
    }

    pub fn tau_is_1432(&self) -> bool {
        self.tau.values() == [1, 4, 3, 2]
    }
}

/// Does every cyclic rotation of the cycle form, read as a word, avoid τ?
/// Checks the n rotations directly with the generic matcher, stopping at the
/// first containment.
pub fn all_rotations_avoid(cf: &CycleForm, tau: &Pattern) -> bool {
    let letters = cf.letters();
    let n = letters.len();
    let mut buf = Vec::with_capacity(n);
    for r in 0..n {
        buf.clear();
        buf.extend_from_slice(&letters[r..]);
        buf.extend_from_slice(&letters[..r]);
        if patterns::contains_slice(&buf, tau.values()) {
            return false;
        }
    }
    true
}

/// Does the standard cycle form, read as a word, avoid both 321 and 2143?
/// For τ = 1432 this is equivalent to [`all_rotations_avoid`] and is the
/// fast path the oracle prunes with.
pub fn avoids_321_and_2143(cf: &CycleForm) -> bool {
    let mut state = PrefixState::new(cf.len());
    cf.letters().iter().all(|&x| state.try_push(x))
}

/// Incremental 321/2143 detector for words grown letter by letter.
///
/// When the current prefix is clean, a freshly appended letter x can only
/// complete an occurrence that ends at x:
///   * as the "1" of 321 — some earlier descent sits entirely above x;
///   * as the "3" of 2143 — some earlier letter above x is preceded by a
///     descent whose top is below x.
///
/// Tracking prefix maxima, the largest descent bottom, and for each prefix
/// the smallest descent top makes both checks O(prefix length), with O(1)
/// amortized state growth and exact rollback on pop.
#[derive(Debug, Clone)]
pub(crate) struct PrefixState {
    letters: Vec<u32>,
    run_max: Vec<u32>,            // prefix maximum
    descent_bottom_max: Vec<u32>, // largest letter with a larger letter before it (0 = none)
    descent_top_min: Vec<u32>,    // smallest letter with a smaller letter after it (MAX = none)
}

impl PrefixState {
    pub(crate) fn new(capacity: usize) -> Self {
        Self {
            letters: Vec::with_capacity(capacity),
            run_max: Vec::with_capacity(capacity),
            descent_bottom_max: Vec::with_capacity(capacity),
            descent_top_min: Vec::with_capacity(capacity),
        }
    }

    /// Would appending x keep the word free of 321 and 2143?
    pub(crate) fn can_push(&self, x: u32) -> bool {
        let t = self.letters.len();
        if t == 0 {
            return true;
        }
        // 321 ending at x
        if self.descent_bottom_max[t - 1] > x {
            return false;
        }
        // 2143 ending at x: a letter above x whose prefix already holds a
        // descent topped below x
        for p in 1..t {
            if self.letters[p] > x && self.descent_top_min[p - 1] < x {
                return false;
            }
        }
        true
    }

    /// Appends x when the word stays clean; returns whether it was appended.
    pub(crate) fn try_push(&mut self, x: u32) -> bool {
        if !self.can_push(x) {
            return false;
        }
        self.push_unchecked(x);
        true
    }

    pub(crate) fn push_unchecked(&mut self, x: u32) {
        let t = self.letters.len();
        let prev_max = if t == 0 { 0 } else { self.run_max[t - 1] };
        let prev_bottom = if t == 0 {
            0
        } else {
            self.descent_bottom_max[t - 1]
        };
        let prev_top = if t == 0 {
            u32::MAX
        } else {
            self.descent_top_min[t - 1]
        };
        self.run_max.push(prev_max.max(x));
        self.descent_bottom_max.push(if x < prev_max {
            prev_bottom.max(x)
        } else {
            prev_bottom
        });
        // descents newly ending at x contribute their smallest top:
        // the smallest earlier letter above x
        let mut top = u32::MAX;
        if x < prev_max {
            for &y in &self.letters {
                if y > x && y < top {
                    top = y;
                }
            }
        }
        self.descent_top_min.push(prev_top.min(top));
        self.letters.push(x);
    }

    pub(crate) fn pop(&mut self) {
        self.letters.pop();
        self.run_max.pop();
        self.descent_bottom_max.pop();
        self.descent_top_min.pop();
    }
}

/// Structural test for cycle forms whose second letter is j ≥ 3, n ≥ 5:
/// (1) the letters 2,…,j−1 occur in increasing order;
/// (2) the letters above j between j and j−1 occur in increasing order;
/// (3) the letters above j after 2 occur in increasing order.
/// On this domain the three conditions together are equivalent to
/// [`avoids_321_and_2143`].
pub fn structure_conditions_hold(cf: &CycleForm) -> Result<bool> {
    let n = cf.len();
    if n < 5 {
        return Err(Error::Domain(format!(
            "structure test is stated for n >= 5, got {n}"
        )));
    }
    let j = cf.second().expect("n >= 5 has a second letter");
    if j < 3 {
        return Err(Error::Domain(format!(
            "structure test needs second letter >= 3, got {j}"
        )));
    }
    let letters = cf.letters();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in letters.iter().enumerate() {
        pos[v as usize] = i;
    }
    // (1)
    for v in 2..j - 1 {
        if pos[v as usize] > pos[v as usize + 1] {
            return Ok(false);
        }
    }
    // (2) — j sits at index 1, j−1 strictly later
    let upper_window = &letters[2..pos[j as usize - 1]];
    if !increasing_above(upper_window, j) {
        return Ok(false);
    }
    // (3)
    let after_two = &letters[pos[2] + 1..];
    if !increasing_above(after_two, j) {
        return Ok(false);
    }
    Ok(true)
}

fn increasing_above(window: &[u32], j: u32) -> bool {
    let mut prev = 0u32;
    for &v in window {
        if v > j {
            if v < prev {
                return false;
            }
            prev = v;
        }
    }
    true
}

/// Definitional membership test: the one-line form avoids δk (when k is
/// given) and every rotation of the cycle form avoids τ. Deliberately routed
/// through the generic matcher; the oracle's pruned fast path is validated
/// against this.
pub fn is_member(cf: &CycleForm, query: &ClassQuery) -> bool {
    assert_eq!(
        cf.len(),
        query.n,
        "cycle form size must match the query size"
    );
    if let Some(k) = query.k {
        if cf.to_one_line().word().contains(&Pattern::decreasing(k)) {
            return false;
        }
    }
    all_rotations_avoid(cf, &query.tau)
}
