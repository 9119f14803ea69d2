//! Brute-force oracle: exhaustive counts over all (n−1)! standard cycle
//! forms, refined by the second letter j = c₂ and, for δ4, by a case
//! classification of the members with j ≥ 4.
//!
//! Enumeration walks cycle-form space (words starting with 1) rather than
//! one-line space: every such word is automatically an n-cycle, so no
//! cyclicity filter is needed. For τ = 1432 the walk prunes any prefix that
//! already contains 321 or 2143 — licensed by the rotation equivalence — and
//! leaves only the one-line δk test at the leaves. For any other τ the walk
//! is unpruned and every leaf runs the full rotation test.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::avoidance::{self, ClassQuery, PrefixState};
use crate::error::{Error, Result};
use crate::patterns::{self, Pattern};
use crate::perm::CycleForm;

/// Hard ceiling for exhaustive walks: 11! ≈ 4·10⁷ leaves at n = 12.
pub const MAX_ORACLE_N: usize = 12;

/// Case classification of δ4 members with second letter j ≥ 4.
///
/// For 4 ≤ j ≤ n−2 the member falls into one of four shapes:
/// * `I`   — the single interleaved form ending in (j−1, n), even n only;
/// * `II`  — ends with the two letters (n−1, n);
/// * `III` — the letter 2 occurs after the letter n;
/// * `IV`  — the last letter is j−1 (and 2 occurs before n).
///
/// `JEqNMinus1` and `JEqN` tag the members with j = n−1 and j = n, which sit
/// outside the four-way split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Delta4Case {
    I,
    II,
    III,
    IV,
    JEqNMinus1,
    JEqN,
}

impl Delta4Case {
    pub const ALL: [Delta4Case; 6] = [
        Delta4Case::I,
        Delta4Case::II,
        Delta4Case::III,
        Delta4Case::IV,
        Delta4Case::JEqNMinus1,
        Delta4Case::JEqN,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Delta4Case::I => "i",
            Delta4Case::II => "ii",
            Delta4Case::III => "iii",
            Delta4Case::IV => "iv",
            Delta4Case::JEqNMinus1 => "n-1",
            Delta4Case::JEqN => "n",
        }
    }
}

/// An exhaustive count, refined by j = c₂ and (when the query is δ4 with
/// τ = 1432 and n ≥ 6) by the [`Delta4Case`] classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    pub k: Option<usize>,
    pub tau: Pattern,
    pub total: u64,
    /// Keys are exactly 2..=n, in order; values sum to `total`.
    pub per_j: BTreeMap<u32, u64>,
    /// Present iff k = 4, τ = 1432 and n ≥ 6. Keys are (j, case) pairs for
    /// members with j ≥ 4.
    pub delta4_cases: Option<BTreeMap<(u32, Delta4Case), u64>>,
}

impl CountReport {
    /// Count of members with c₂ = j, zero if j is out of range.
    pub fn j_count(&self, j: usize) -> u64 {
        self.per_j.get(&(j as u32)).copied().unwrap_or(0)
    }

    /// Aggregate count over 4 ≤ j ≤ n.
    pub fn tail_count(&self) -> u64 {
        self.per_j
            .iter()
            .filter(|(&j, _)| j >= 4)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Tally for one classified case, summed over all j when `j` is `None`.
    pub fn case_count(&self, j: Option<usize>, case: Delta4Case) -> Option<u64> {
        let map = self.delta4_cases.as_ref()?;
        Some(match j {
            Some(j) => map.get(&(j as u32, case)).copied().unwrap_or(0),
            None => map
                .iter()
                .filter(|((_, c), _)| *c == case)
                .map(|(_, &v)| v)
                .sum(),
        })
    }
}

/// Raw accumulator: merged by pure addition, so any grouping of the search
/// space into units yields the same totals.
#[derive(Debug, Default, Clone)]
struct Tally {
    total: u64,
    per_j: BTreeMap<u32, u64>,
    cases: BTreeMap<(u32, Delta4Case), u64>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.total += other.total;
        for (j, c) in other.per_j {
            *self.per_j.entry(j).or_insert(0) += c;
        }
        for (key, c) in other.cases {
            *self.cases.entry(key).or_insert(0) += c;
        }
    }

    fn record(&mut self, letters: &[u32], classify: bool) -> Result<()> {
        self.total += 1;
        let j = letters[1];
        *self.per_j.entry(j).or_insert(0) += 1;
        if classify && j >= 4 {
            let case = classify_letters(letters)?;
            *self.cases.entry((j, case)).or_insert(0) += 1;
        }
        Ok(())
    }
}

/// Depth-first walk over cycle forms (1, c₂, …, cₙ). With `prune` set, only
/// prefixes avoiding 321 and 2143 are extended.
struct Walker {
    n: usize,
    k: Option<usize>,
    prune: bool,
    tau: Vec<u32>,
    used: Vec<bool>,
    letters: Vec<u32>,
    state: PrefixState,
    one_line: Vec<u32>,
    rotation: Vec<u32>,
}

impl Walker {
    fn new(q: &ClassQuery) -> Self {
        let n = q.n;
        let mut w = Walker {
            n,
            k: q.k,
            prune: q.tau_is_1432(),
            tau: q.tau.values().to_vec(),
            used: vec![false; n + 1],
            letters: Vec::with_capacity(n),
            state: PrefixState::new(n),
            one_line: vec![0; n],
            rotation: Vec::with_capacity(n),
        };
        w.push(1);
        w
    }

    /// Seeds the walk at a fixed prefix that was already validated (and, in
    /// the pruned regime, already known to avoid 321 and 2143).
    fn with_prefix(q: &ClassQuery, prefix: &[u32]) -> Self {
        let mut w = Walker::new(q);
        for &x in &prefix[1..] {
            w.push(x);
        }
        w
    }

    fn push(&mut self, x: u32) {
        self.used[x as usize] = true;
        self.letters.push(x);
        if self.prune {
            self.state.push_unchecked(x);
        }
    }

    fn pop(&mut self) {
        let x = self.letters.pop().expect("walker stack underflow");
        self.used[x as usize] = false;
        if self.prune {
            self.state.pop();
        }
    }

    fn descend(&mut self, visit: &mut impl FnMut(&[u32]) -> Result<()>) -> Result<()> {
        if self.letters.len() == self.n {
            if self.leaf_is_member() {
                visit(&self.letters)?;
            }
            return Ok(());
        }
        for x in 2..=self.n as u32 {
            if self.used[x as usize] {
                continue;
            }
            if self.prune && !self.state.can_push(x) {
                continue;
            }
            self.push(x);
            self.descend(visit)?;
            self.pop();
        }
        Ok(())
    }

    fn leaf_is_member(&mut self) -> bool {
        let n = self.n;
        for i in 0..n {
            self.one_line[self.letters[i] as usize - 1] = self.letters[(i + 1) % n];
        }
        if let Some(k) = self.k {
            if patterns::lds_slice(&self.one_line) >= k {
                return false;
            }
        }
        if self.prune {
            // Prefix filtering already guarantees the rotation condition.
            return true;
        }
        for r in 0..n {
            self.rotation.clear();
            self.rotation.extend_from_slice(&self.letters[r..]);
            self.rotation.extend_from_slice(&self.letters[..r]);
            if patterns::contains_slice(&self.rotation, &self.tau) {
                return false;
            }
        }
        true
    }
}

fn validate_oracle_query(q: &ClassQuery) -> Result<()> {
    if q.n < 2 {
        return Err(Error::Domain(format!(
            "exhaustive counting needs n >= 2, got {}",
            q.n
        )));
    }
    if q.n > MAX_ORACLE_N {
        return Err(Error::LimitExceeded {
            n: q.n,
            max: MAX_ORACLE_N,
        });
    }
    Ok(())
}

fn classification_applies(q: &ClassQuery) -> bool {
    q.k == Some(4) && q.tau_is_1432() && q.n >= 6
}

fn report_from_tally(q: &ClassQuery, tally: Tally, classified: bool) -> CountReport {
    let mut per_j: BTreeMap<u32, u64> = (2..=q.n as u32).map(|j| (j, 0)).collect();
    for (j, c) in tally.per_j {
        *per_j.get_mut(&j).expect("j within 2..=n") += c;
    }
    CountReport {
        n: q.n,
        k: q.k,
        tau: q.tau.clone(),
        total: tally.total,
        per_j,
        delta4_cases: classified.then_some(tally.cases),
    }
}

/// Counts the members of the class by exhausting every standard cycle form.
/// Single-threaded; see [`count_brute_partitioned`] for the parallel variant
/// with identical output.
pub fn count_brute(q: &ClassQuery) -> Result<CountReport> {
    validate_oracle_query(q)?;
    let classify = classification_applies(q);
    let mut tally = Tally::default();
    Walker::new(q).descend(&mut |letters| tally.record(letters, classify))?;
    Ok(report_from_tally(q, tally, classify))
}

/// The full member list in lexicographic cycle-form order.
pub fn members(q: &ClassQuery) -> Result<Vec<CycleForm>> {
    validate_oracle_query(q)?;
    let mut out = Vec::new();
    Walker::new(q).descend(&mut |letters| {
        out.push(CycleForm::from_letters_unchecked(letters.to_vec()));
        Ok(())
    })?;
    Ok(out)
}

/// Classifies a δ4 member with j = c₂ ≥ 4 (n ≥ 6) into its [`Delta4Case`].
///
/// The discriminating tests — position of 2 relative to n, last letter,
/// second-to-last letter — are meaningful only for genuine members; feeding
/// an arbitrary cycle form may yield `Domain` errors or unhelpful tags.
pub fn classify_delta4(cf: &CycleForm) -> Result<Delta4Case> {
    let n = cf.len();
    if n < 6 {
        return Err(Error::Domain(format!(
            "case classification is stated for n >= 6, got {n}"
        )));
    }
    let j = cf.second().expect("n >= 6 has a second letter");
    if j < 4 {
        return Err(Error::Domain(format!(
            "case classification needs second letter >= 4, got {j}"
        )));
    }
    classify_letters(cf.letters())
}

fn classify_letters(letters: &[u32]) -> Result<Delta4Case> {
    let n = letters.len();
    let j = letters[1];
    if j as usize == n {
        return Ok(Delta4Case::JEqN);
    }
    if j as usize == n - 1 {
        return Ok(Delta4Case::JEqNMinus1);
    }
    let pos_of = |v: u32| {
        letters
            .iter()
            .position(|&x| x == v)
            .expect("letter present in cycle form")
    };
    if pos_of(2) > pos_of(n as u32) {
        return Ok(Delta4Case::III);
    }
    let last = letters[n - 1];
    if last == j - 1 {
        return Ok(Delta4Case::IV);
    }
    if last == n as u32 {
        if letters[n - 2] == n as u32 - 1 {
            return Ok(Delta4Case::II);
        }
        return Ok(Delta4Case::I);
    }
    Err(Error::Domain(format!(
        "cycle form does not match any recognized member shape (j = {j}, last = {last})"
    )))
}

/// Same result as [`count_brute`], computed over independent prefix units in
/// parallel on the current rayon pool.
///
/// The space is partitioned by c₂ and, when `parts` asks for more units than
/// there are values of c₂, by progressively longer fixed prefixes. Unit
/// tallies are merged by addition, so the report is identical for every
/// `parts` value and every thread count.
pub fn count_brute_partitioned(q: &ClassQuery, parts: usize) -> Result<CountReport> {
    validate_oracle_query(q)?;
    if parts == 0 {
        return Err(Error::Domain("parts must be positive".into()));
    }
    let classify = classification_applies(q);
    let prune = q.tau_is_1432();

    // Grow the frontier of fixed prefixes until it has at least `parts`
    // units (or maximum useful depth is reached). In the pruned regime a
    // prefix containing 321 or 2143 is dropped outright: the subtree it
    // roots contributes nothing.
    let max_depth = q.n.min(4);
    let mut frontier: Vec<Vec<u32>> = vec![vec![1]];
    while frontier.len() < parts && frontier[0].len() < max_depth {
        let mut next = Vec::with_capacity(frontier.len() * q.n);
        for prefix in &frontier {
            let mut state = PrefixState::new(prefix.len() + 1);
            for &x in prefix {
                state.push_unchecked(x);
            }
            for x in 2..=q.n as u32 {
                if prefix.contains(&x) {
                    continue;
                }
                if prune && !state.can_push(x) {
                    continue;
                }
                let mut extended = prefix.clone();
                extended.push(x);
                next.push(extended);
            }
        }
        frontier = next;
        if frontier.is_empty() {
            // Every prefix of this depth is already dirty; the count is zero.
            return Ok(report_from_tally(q, Tally::default(), classify));
        }
    }

    let partials: Vec<Result<Tally>> = frontier
        .par_iter()
        .map(|prefix| {
            let mut tally = Tally::default();
            Walker::with_prefix(q, prefix)
                .descend(&mut |letters| tally.record(letters, classify))?;
            Ok(tally)
        })
        .collect();

    let mut merged = Tally::default();
    for partial in partials {
        merged.absorb(partial?);
    }
    Ok(report_from_tally(q, merged, classify))
}

/// Applies `f` to every standard cycle form of size n, in lexicographic
/// order of the letter sequence.
pub fn for_each_cycle_form(n: usize, mut f: impl FnMut(&CycleForm)) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("cycle forms need n >= 1".into()));
    }
    if n > MAX_ORACLE_N {
        return Err(Error::LimitExceeded {
            n,
            max: MAX_ORACLE_N,
        });
    }
    let mut letters = vec![1u32; n];
    let mut used = vec![false; n + 1];
    fn rec(
        depth: usize,
        n: usize,
        letters: &mut Vec<u32>,
        used: &mut Vec<bool>,
        f: &mut impl FnMut(&CycleForm),
    ) {
        if depth == n {
            let cf = CycleForm::from_letters_unchecked(letters.clone());
            f(&cf);
            return;
        }
        for x in 2..=n as u32 {
            if used[x as usize] {
                continue;
            }
            used[x as usize] = true;
            letters[depth] = x;
            rec(depth + 1, n, letters, used, f);
            used[x as usize] = false;
        }
    }
    used[1] = true;
    rec(1, n, &mut letters, &mut used, &mut f);
    Ok(())
}

/// Outcome of an exhaustive equivalence sweep.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub checked: u64,
    pub counterexamples: Vec<CycleForm>,
}

impl SweepReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// For every cycle form with 2 ≤ n ≤ n_max: all rotations avoid 1432 if and
/// only if the standard form avoids both 321 and 2143.
pub fn check_rotation_equivalence(n_max: usize) -> Result<SweepReport> {
    let tau = Pattern::parse("1432").expect("valid pattern");
    let mut report = SweepReport {
        checked: 0,
        counterexamples: Vec::new(),
    };
    for n in 2..=n_max.max(2) {
        for_each_cycle_form(n, |cf| {
            report.checked += 1;
            if avoidance::all_rotations_avoid(cf, &tau) != avoidance::avoids_321_and_2143(cf) {
                report.counterexamples.push(cf.clone());
            }
        })?;
    }
    Ok(report)
}

/// For every cycle form with 5 ≤ n ≤ n_max and c₂ ≥ 3: the three positional
/// structure conditions hold if and only if the word avoids 321 and 2143.
pub fn check_structure_equivalence(n_max: usize) -> Result<SweepReport> {
    if n_max < 5 {
        return Err(Error::Domain(format!(
            "structure sweep needs n_max >= 5, got {n_max}"
        )));
    }
    let mut report = SweepReport {
        checked: 0,
        counterexamples: Vec::new(),
    };
    for n in 5..=n_max {
        for_each_cycle_form(n, |cf| {
            if cf.second().is_some_and(|j| j >= 3) {
                report.checked += 1;
                let structural = avoidance::structure_conditions_hold(cf)
                    .expect("n >= 5 and second letter >= 3 are in domain");
                if structural != avoidance::avoids_321_and_2143(cf) {
                    report.counterexamples.push(cf.clone());
                }
            }
        })?;
    }
    Ok(report)
}

/// For every cycle form with 2 ≤ n ≤ n_max whose rotations all avoid 1432:
/// the one-line notation has no decreasing subsequence longer than 4.
pub fn check_width_bound(n_max: usize) -> Result<SweepReport> {
    let tau = Pattern::parse("1432").expect("valid pattern");
    let mut report = SweepReport {
        checked: 0,
        counterexamples: Vec::new(),
    };
    for n in 2..=n_max.max(2) {
        for_each_cycle_form(n, |cf| {
            if avoidance::all_rotations_avoid(cf, &tau) {
                report.checked += 1;
                if cf.to_one_line().word().lds_length() > 4 {
                    report.counterexamples.push(cf.clone());
                }
            }
        })?;
    }
    Ok(report)
}
