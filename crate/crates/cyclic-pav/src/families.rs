//! Constructive families and size-changing bijections.
//!
//! Two maps drive the counting recurrences:
//! * deleting the letter 2 from a cycle form (1, 2, c₃, …, cₙ) and shifting
//!   the remaining letters down, which identifies the j = 2 members of size
//!   n with all members of size n−1, for every k;
//! * deleting a trailing maximal letter, which for δ4 identifies members
//!   ending in (n−1, n) with size-(n−1) members ending in n−1.
//!
//! The generators build the explicitly parametrized families: the δ3
//! families at j = 3 and at each 4 ≤ j ≤ ⌊(n+3)/2⌋, and the δ4 case-iii and
//! case-i shapes. Each generated form carries its construction tag so
//! callers can re-verify membership.

use std::fmt;

use crate::avoidance::{is_member, ClassQuery};
use crate::chains::ChainCover;
use crate::error::{Error, Result};
use crate::perm::CycleForm;

/// Which constructive family produced a cycle form, with its free
/// parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// δ3, j = 3: odd letters 3, 5, …, 2t+1, then the run 2t+2, …, n, then
    /// the even letters 2, 4, …, 2t.
    Delta3J3 { t: usize },
    /// δ3, 4 ≤ j ≤ ⌊(n+3)/2⌋: the unique member with second letter j.
    Delta3Unique { j: usize },
    /// δ4 case iii: (1, j, S, n, 2, 3, …, j−1, T) where S is any subset of
    /// {j+1, …, n−1} and T its complement, both ascending.
    Delta4CaseIII { j: usize, placement: Vec<u32> },
    /// δ4 case i: the single fully interleaved member at even n, with
    /// j = (n+2)/2.
    Delta4CaseI { j: usize },
}

impl Construction {
    pub fn family_tag(&self) -> &'static str {
        match self {
            Construction::Delta3J3 { .. } => "delta3-j3",
            Construction::Delta3Unique { .. } => "delta3-unique",
            Construction::Delta4CaseIII { .. } => "delta4-case-iii",
            Construction::Delta4CaseI { .. } => "delta4-case-i",
        }
    }

    /// The k whose class the construction targets.
    pub fn k(&self) -> usize {
        match self {
            Construction::Delta3J3 { .. } | Construction::Delta3Unique { .. } => 3,
            Construction::Delta4CaseIII { .. } | Construction::Delta4CaseI { .. } => 4,
        }
    }

    pub fn parameters(&self) -> String {
        match self {
            Construction::Delta3J3 { t } => format!("t={t}"),
            Construction::Delta3Unique { j } => format!("j={j}"),
            Construction::Delta4CaseIII { j, placement } => {
                let inner = placement
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("j={j}, placement={{{inner}}}")
            }
            Construction::Delta4CaseI { j } => format!("j={j}"),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.family_tag(), self.parameters())
    }
}

/// A generated cycle form together with the construction that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub cf: CycleForm,
    pub construction: Construction,
}

impl FamilyMember {
    /// Re-checks the defining membership test (τ = 1432 with the
    /// construction's k) from scratch.
    pub fn verify(&self) -> bool {
        let query = ClassQuery::with_1432(self.cf.len(), Some(self.construction.k()))
            .expect("generator domains guarantee a valid query");
        is_member(&self.cf, &query)
    }
}

impl fmt::Display for FamilyMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.construction, self.cf)
    }
}

/// Deletes the letter 2 from (1, 2, c₃, …, cₙ) and decrements every
/// remaining letter above 2, yielding (1, c₃−1, …, cₙ−1).
///
/// For every k ≥ 3 this restricts to a bijection from the j = 2 members of
/// size n onto all members of size n−1; [`insert_letter_two`] is its
/// inverse.
pub fn delete_letter_two(cf: &CycleForm) -> Result<CycleForm> {
    if cf.len() < 3 {
        return Err(Error::Domain(format!(
            "letter-2 deletion needs n >= 3, got {}",
            cf.len()
        )));
    }
    if cf.second() != Some(2) {
        return Err(Error::Domain(format!(
            "letter-2 deletion needs second letter 2, got {cf}"
        )));
    }
    let mut letters = Vec::with_capacity(cf.len() - 1);
    letters.push(1);
    letters.extend(cf.letters()[2..].iter().map(|&x| x - 1));
    Ok(CycleForm::from_letters_unchecked(letters))
}

/// Inserts the letter 2 directly after the leading 1 and increments every
/// letter above 1: the inverse of [`delete_letter_two`], defined on every
/// cycle form.
pub fn insert_letter_two(cf: &CycleForm) -> CycleForm {
    let mut letters = Vec::with_capacity(cf.len() + 1);
    letters.push(1);
    letters.push(2);
    letters.extend(cf.letters()[1..].iter().map(|&x| x + 1));
    CycleForm::from_letters_unchecked(letters)
}

/// Drops a trailing letter n from a cycle form of size n ≥ 4.
///
/// Deleting a trailing maximum always preserves membership (for every k and
/// for the rotation condition); for δ4 it restricts, per second letter
/// 3 ≤ j ≤ n−2, to a bijection from members ending in (n−1, n) onto
/// size-(n−1) members ending in n−1. [`append_max`] undoes it.
pub fn delete_trailing_max(cf: &CycleForm) -> Result<CycleForm> {
    let n = cf.len();
    if n < 4 {
        return Err(Error::Domain(format!(
            "trailing-maximum deletion needs n >= 4, got {n}"
        )));
    }
    if cf.letters()[n - 1] != n as u32 {
        return Err(Error::Domain(format!(
            "trailing-maximum deletion needs the last letter to be {n}, got {cf}"
        )));
    }
    Ok(CycleForm::from_letters_unchecked(
        cf.letters()[..n - 1].to_vec(),
    ))
}

/// Appends the new maximal letter n+1 at the end: the inverse of
/// [`delete_trailing_max`], defined on every cycle form. Unlike deletion,
/// appending can create new one-line patterns, so it preserves membership
/// only from the shapes described at [`delete_trailing_max`].
pub fn append_max(cf: &CycleForm) -> CycleForm {
    let mut letters = cf.letters().to_vec();
    letters.push(cf.len() as u32 + 1);
    CycleForm::from_letters_unchecked(letters)
}

fn check_family_size(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::Domain(format!("{what} needs n >= {min}, got {n}")));
    }
    Ok(())
}

/// All δ3 members with second letter 3, for n ≥ 5: one per
/// t ∈ {1, …, ⌊(n−1)/2⌋}, in increasing t order.
pub fn gen_delta3_j3(n: usize) -> Result<Vec<FamilyMember>> {
    check_family_size(n, 5, "the j = 3 family")?;
    let mut out = Vec::new();
    for t in 1..=(n - 1) / 2 {
        let mut letters = Vec::with_capacity(n);
        letters.push(1);
        letters.extend((1..=t).map(|i| 2 * i as u32 + 1));
        letters.extend((2 * t as u32 + 2)..=(n as u32));
        letters.extend((1..=t).map(|i| 2 * i as u32));
        out.push(FamilyMember {
            cf: CycleForm::new(letters).expect("family construction is a valid cycle form"),
            construction: Construction::Delta3J3 { t },
        });
    }
    Ok(out)
}

/// The unique δ3 member with second letter j, for n ≥ 5 and
/// 4 ≤ j ≤ ⌊(n+3)/2⌋ (equivalently 2j−3 ≤ n):
/// (1, j, 2, j+1, 3, …, j−2, 2j−3, 2j−2, …, n, j−1).
pub fn gen_delta3_unique(n: usize, j: usize) -> Result<FamilyMember> {
    check_family_size(n, 5, "the unique-member family")?;
    if j < 4 || 2 * j - 3 > n {
        return Err(Error::Domain(format!(
            "the unique-member family needs 4 <= j <= (n+3)/2, got j = {j} at n = {n}"
        )));
    }
    let mut letters = Vec::with_capacity(n);
    letters.push(1);
    for i in 0..j - 2 {
        letters.push((j + i) as u32);
        if i < j - 3 {
            letters.push((2 + i) as u32);
        }
    }
    letters.extend((2 * j as u32 - 2)..=(n as u32));
    letters.push(j as u32 - 1);
    Ok(FamilyMember {
        cf: CycleForm::new(letters).expect("family construction is a valid cycle form"),
        construction: Construction::Delta3Unique { j },
    })
}

/// The two-chain cover of the one-line form of [`gen_delta3_unique`]'s
/// member, given by position sets: {1, …, j−2} ∪ {2j−3, …, n−1} and
/// {j−1, …, 2j−4} ∪ {n}.
pub fn delta3_unique_cover(n: usize, j: usize) -> Result<ChainCover> {
    check_family_size(n, 5, "the unique-member cover")?;
    if j < 4 || 2 * j - 3 > n {
        return Err(Error::Domain(format!(
            "the unique-member cover needs 4 <= j <= (n+3)/2, got j = {j} at n = {n}"
        )));
    }
    let mut first: Vec<u32> = (1..=j as u32 - 2).collect();
    first.extend(2 * j as u32 - 3..=n as u32 - 1);
    let mut second: Vec<u32> = (j as u32 - 1..=2 * j as u32 - 4).collect();
    second.push(n as u32);
    Ok(ChainCover::new(vec![first, second]))
}

/// One δ4 case-iii member: (1, j, S, n, 2, 3, …, j−1, T) with S the chosen
/// ascending placement ⊆ {j+1, …, n−1} and T its ascending complement.
/// Needs n ≥ 6 and 4 ≤ j ≤ n−1.
pub fn gen_delta4_case3(n: usize, j: usize, placement: &[u32]) -> Result<FamilyMember> {
    check_family_size(n, 6, "the case-iii family")?;
    if !(4..=n - 1).contains(&j) {
        return Err(Error::Domain(format!(
            "the case-iii family needs 4 <= j <= n-1, got j = {j} at n = {n}"
        )));
    }
    let lo = j as u32 + 1;
    let hi = n as u32 - 1;
    for pair in placement.windows(2) {
        if pair[0] >= pair[1] {
            return Err(Error::Domain(format!(
                "placement must be strictly increasing, got {placement:?}"
            )));
        }
    }
    if placement.iter().any(|&v| v < lo || v > hi) {
        return Err(Error::Domain(format!(
            "placement must lie in [{lo}, {hi}], got {placement:?}"
        )));
    }
    let mut letters = Vec::with_capacity(n);
    letters.push(1);
    letters.push(j as u32);
    letters.extend_from_slice(placement);
    letters.push(n as u32);
    letters.extend(2..=j as u32 - 1);
    letters.extend((lo..=hi).filter(|v| !placement.contains(v)));
    Ok(FamilyMember {
        cf: CycleForm::new(letters).expect("family construction is a valid cycle form"),
        construction: Construction::Delta4CaseIII {
            j,
            placement: placement.to_vec(),
        },
    })
}

/// Every case-iii member with second letter j, in placement-mask order
/// (∅ first, each letter toggled from smallest to largest).
pub fn gen_delta4_case3_all(n: usize, j: usize) -> Result<Vec<FamilyMember>> {
    check_family_size(n, 6, "the case-iii family")?;
    if !(4..=n - 1).contains(&j) {
        return Err(Error::Domain(format!(
            "the case-iii family needs 4 <= j <= n-1, got j = {j} at n = {n}"
        )));
    }
    let pool: Vec<u32> = (j as u32 + 1..=n as u32 - 1).collect();
    let mut out = Vec::with_capacity(1 << pool.len());
    for mask in 0u32..(1 << pool.len()) {
        let placement: Vec<u32> = pool
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        out.push(gen_delta4_case3(n, j, &placement)?);
    }
    Ok(out)
}

/// The three-chain cover of a case-iii member's one-line form, read off the
/// cycle word by splitting at the letter n: the positions before n, the
/// positions after n except the last, and {last position, n}.
pub fn delta4_case3_cover(cf: &CycleForm) -> Result<ChainCover> {
    let n = cf.len();
    let letters = cf.letters();
    let p = letters
        .iter()
        .position(|&x| x == n as u32)
        .expect("cycle form contains its maximum");
    if p + 3 > n {
        return Err(Error::Domain(format!(
            "the split-at-maximum cover needs at least two letters after {n}, got {cf}"
        )));
    }
    let mut first = letters[..p].to_vec();
    let mut second = letters[p + 1..n - 1].to_vec();
    first.sort_unstable();
    second.sort_unstable();
    let third = vec![letters[n - 1].min(n as u32), letters[n - 1].max(n as u32)];
    Ok(ChainCover::new(vec![first, second, third]))
}

/// The δ4 case-i member for n ≥ 6: none at odd n; at even n the single
/// fully interleaved form (1, j, 2, j+1, 3, …, j−2, n−1, j−1, n) with
/// j = (n+2)/2.
pub fn gen_delta4_case1(n: usize) -> Result<Option<FamilyMember>> {
    check_family_size(n, 6, "the case-i family")?;
    if n % 2 == 1 {
        return Ok(None);
    }
    let j = (n + 2) / 2;
    let mut letters = Vec::with_capacity(n);
    letters.push(1);
    for i in 0..j - 2 {
        letters.push((j + i) as u32);
        letters.push((2 + i) as u32);
    }
    letters.push(n as u32);
    Ok(Some(FamilyMember {
        cf: CycleForm::new(letters).expect("family construction is a valid cycle form"),
        construction: Construction::Delta4CaseI { j },
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::verify_chain_cover;
    use crate::enumeration::{classify_delta4, for_each_cycle_form, members, Delta4Case};

    fn cf(letters: &[u32]) -> CycleForm {
        CycleForm::new(letters.to_vec()).unwrap()
    }

    #[test]
    fn letter_two_deletion_examples() {
        assert_eq!(
            delete_letter_two(&cf(&[1, 2, 4, 3, 5])).unwrap(),
            cf(&[1, 3, 2, 4])
        );
        assert_eq!(delete_letter_two(&cf(&[1, 2, 3])).unwrap(), cf(&[1, 2]));
        assert!(delete_letter_two(&cf(&[1, 3, 2])).is_err());
        assert!(delete_letter_two(&cf(&[1, 2])).is_err());
    }

    #[test]
    fn letter_two_insertion_examples() {
        assert_eq!(insert_letter_two(&cf(&[1, 3, 2, 4])), cf(&[1, 2, 4, 3, 5]));
        assert_eq!(insert_letter_two(&cf(&[1, 2])), cf(&[1, 2, 3]));
        assert_eq!(insert_letter_two(&cf(&[1])), cf(&[1, 2]));
    }

    #[test]
    fn letter_two_round_trips() {
        for n in 2..=6 {
            for_each_cycle_form(n, |form| {
                assert_eq!(delete_letter_two(&insert_letter_two(form)).unwrap(), *form);
                if form.len() >= 3 && form.second() == Some(2) {
                    assert_eq!(insert_letter_two(&delete_letter_two(form).unwrap()), *form);
                }
            })
            .unwrap();
        }
    }

    #[test]
    fn trailing_max_examples() {
        assert_eq!(
            delete_trailing_max(&cf(&[1, 3, 2, 4, 5])).unwrap(),
            cf(&[1, 3, 2, 4])
        );
        assert_eq!(
            delete_trailing_max(&cf(&[1, 2, 3, 4])).unwrap(),
            cf(&[1, 2, 3])
        );
        assert!(delete_trailing_max(&cf(&[1, 4, 2, 3])).is_err());
        assert!(delete_trailing_max(&cf(&[1, 2, 3])).is_err());
    }

    #[test]
    fn trailing_max_round_trips() {
        for n in 4..=6 {
            for_each_cycle_form(n, |form| {
                assert_eq!(delete_trailing_max(&append_max(form)).unwrap(), *form);
                if form.letters()[n - 1] == n as u32 {
                    assert_eq!(append_max(&delete_trailing_max(form).unwrap()), *form);
                }
            })
            .unwrap();
        }
    }

    #[test]
    fn letter_two_deletion_preserves_membership() {
        for n in 5..=7 {
            for k in [Some(3), Some(4), Some(5)] {
                let query = ClassQuery::with_1432(n, k).unwrap();
                let smaller = ClassQuery::with_1432(n - 1, k).unwrap();
                let with_j2: Vec<_> = members(&query)
                    .unwrap()
                    .into_iter()
                    .filter(|m| m.second() == Some(2))
                    .collect();
                let mut images: Vec<_> = with_j2
                    .iter()
                    .map(|m| delete_letter_two(m).unwrap())
                    .collect();
                images.sort_by(|a, b| a.letters().cmp(b.letters()));
                let expected = members(&smaller).unwrap();
                assert_eq!(images, expected, "n={n} k={k:?}");
            }
        }
    }

    #[test]
    fn trailing_max_bijection_per_j() {
        // δ4 members ending (n−1, n) map onto size-(n−1) members ending in
        // n−1 with the same second letter.
        for n in 6..=8 {
            let query = ClassQuery::with_1432(n, Some(4)).unwrap();
            let smaller = ClassQuery::with_1432(n - 1, Some(4)).unwrap();
            for j in 3..=n - 2 {
                let mut images: Vec<_> = members(&query)
                    .unwrap()
                    .into_iter()
                    .filter(|m| {
                        m.second() == Some(j as u32)
                            && m.letters()[n - 2] == n as u32 - 1
                            && m.letters()[n - 1] == n as u32
                    })
                    .map(|m| delete_trailing_max(&m).unwrap())
                    .collect();
                images.sort_by(|a, b| a.letters().cmp(b.letters()));
                let expected: Vec<_> = members(&smaller)
                    .unwrap()
                    .into_iter()
                    .filter(|m| m.second() == Some(j as u32) && m.letters()[n - 2] == n as u32 - 1)
                    .collect();
                assert_eq!(images, expected, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn j3_family_examples() {
        let forms: Vec<_> = gen_delta3_j3(5)
            .unwrap()
            .into_iter()
            .map(|m| m.cf)
            .collect();
        assert_eq!(forms, vec![cf(&[1, 3, 4, 5, 2]), cf(&[1, 3, 5, 2, 4])]);
        let forms: Vec<_> = gen_delta3_j3(6)
            .unwrap()
            .into_iter()
            .map(|m| m.cf)
            .collect();
        assert_eq!(
            forms,
            vec![cf(&[1, 3, 4, 5, 6, 2]), cf(&[1, 3, 5, 6, 2, 4])]
        );
        assert!(gen_delta3_j3(4).is_err());
    }

    #[test]
    fn j3_family_complete() {
        for n in 5..=9 {
            let generated: Vec<_> = gen_delta3_j3(n)
                .unwrap()
                .into_iter()
                .map(|m| m.cf)
                .collect();
            let query = ClassQuery::with_1432(n, Some(3)).unwrap();
            let expected: Vec<_> = members(&query)
                .unwrap()
                .into_iter()
                .filter(|m| m.second() == Some(3))
                .collect();
            let mut sorted = generated.clone();
            sorted.sort_by(|a, b| a.letters().cmp(b.letters()));
            assert_eq!(sorted, expected, "n={n}");
            assert_eq!(generated.len(), (n - 1) / 2);
        }
    }

    #[test]
    fn unique_family_examples() {
        assert_eq!(
            gen_delta3_unique(7, 4).unwrap().cf,
            cf(&[1, 4, 2, 5, 6, 7, 3])
        );
        assert_eq!(
            gen_delta3_unique(7, 5).unwrap().cf,
            cf(&[1, 5, 2, 6, 3, 7, 4])
        );
        assert!(gen_delta3_unique(7, 6).is_err());
        assert!(gen_delta3_unique(7, 3).is_err());
        assert!(gen_delta3_unique(4, 4).is_err());
    }

    #[test]
    fn unique_family_complete_per_j() {
        for n in 5..=9 {
            let query = ClassQuery::with_1432(n, Some(3)).unwrap();
            let all = members(&query).unwrap();
            for j in 4..=n {
                let with_j: Vec<_> = all
                    .iter()
                    .filter(|m| m.second() == Some(j as u32))
                    .cloned()
                    .collect();
                match gen_delta3_unique(n, j) {
                    Ok(member) => assert_eq!(with_j, vec![member.cf], "n={n} j={j}"),
                    Err(_) => assert!(with_j.is_empty(), "n={n} j={j}"),
                }
            }
        }
    }

    #[test]
    fn unique_family_cover_verifies() {
        for n in 5..=10 {
            for j in 4..=(n + 3) / 2 {
                let member = gen_delta3_unique(n, j).unwrap();
                let cover = delta3_unique_cover(n, j).unwrap();
                let one_line = member.cf.to_one_line();
                assert!(
                    verify_chain_cover(&one_line, &cover),
                    "n={n} j={j}: {one_line}"
                );
                assert_eq!(cover.chains().len(), 2);
            }
        }
    }

    #[test]
    fn case3_examples() {
        assert_eq!(
            gen_delta4_case3(8, 6, &[7]).unwrap().cf,
            cf(&[1, 6, 7, 8, 2, 3, 4, 5])
        );
        assert_eq!(
            gen_delta4_case3(8, 6, &[]).unwrap().cf,
            cf(&[1, 6, 8, 2, 3, 4, 5, 7])
        );
        assert_eq!(
            gen_delta4_case3(8, 4, &[5, 6, 7]).unwrap().cf,
            cf(&[1, 4, 5, 6, 7, 8, 2, 3])
        );
        assert!(gen_delta4_case3(8, 3, &[]).is_err());
        assert!(gen_delta4_case3(8, 8, &[]).is_err());
        assert!(gen_delta4_case3(8, 6, &[5]).is_err());
        assert!(gen_delta4_case3(8, 4, &[6, 5]).is_err());
        assert!(gen_delta4_case3(5, 4, &[]).is_err());
    }

    #[test]
    fn case3_complete_in_classifier_window() {
        for n in 6..=8 {
            let query = ClassQuery::with_1432(n, Some(4)).unwrap();
            let all = members(&query).unwrap();
            for j in 4..=n - 2 {
                let mut generated: Vec<_> = gen_delta4_case3_all(n, j)
                    .unwrap()
                    .into_iter()
                    .map(|m| m.cf)
                    .collect();
                generated.sort_by(|a, b| a.letters().cmp(b.letters()));
                let expected: Vec<_> = all
                    .iter()
                    .filter(|m| {
                        m.second() == Some(j as u32)
                            && classify_delta4(m).unwrap() == Delta4Case::III
                    })
                    .cloned()
                    .collect();
                assert_eq!(generated, expected, "n={n} j={j}");
                assert_eq!(generated.len(), 1 << (n - 1 - j));
            }
        }
    }

    #[test]
    fn case3_cover_verifies() {
        for n in 6..=9 {
            for j in 4..=n - 1 {
                for member in gen_delta4_case3_all(n, j).unwrap() {
                    let cover = delta4_case3_cover(&member.cf).unwrap();
                    let one_line = member.cf.to_one_line();
                    assert!(
                        verify_chain_cover(&one_line, &cover),
                        "n={n} j={j}: {one_line}"
                    );
                    assert_eq!(cover.chains().len(), 3);
                }
            }
        }
    }

    #[test]
    fn case1_examples() {
        assert_eq!(
            gen_delta4_case1(6).unwrap().unwrap().cf,
            cf(&[1, 4, 2, 5, 3, 6])
        );
        assert_eq!(
            gen_delta4_case1(8).unwrap().unwrap().cf,
            cf(&[1, 5, 2, 6, 3, 7, 4, 8])
        );
        assert!(gen_delta4_case1(7).unwrap().is_none());
        assert!(gen_delta4_case1(5).is_err());
    }

    #[test]
    fn case1_matches_classifier() {
        for n in 6..=9 {
            let query = ClassQuery::with_1432(n, Some(4)).unwrap();
            let expected: Vec<_> = members(&query)
                .unwrap()
                .into_iter()
                .filter(|m| {
                    m.second().is_some_and(|j| j >= 4)
                        && classify_delta4(m).unwrap() == Delta4Case::I
                })
                .collect();
            match gen_delta4_case1(n).unwrap() {
                Some(member) => assert_eq!(expected, vec![member.cf], "n={n}"),
                None => assert!(expected.is_empty(), "n={n}"),
            }
        }
    }

    #[test]
    fn every_generated_member_verifies() {
        for n in 5..=9 {
            for member in gen_delta3_j3(n).unwrap() {
                assert!(member.verify(), "{member}");
            }
            for j in 4..=(n + 3) / 2 {
                let member = gen_delta3_unique(n, j).unwrap();
                assert!(member.verify(), "{member}");
            }
        }
        for n in 6..=9 {
            for j in 4..=n - 1 {
                for member in gen_delta4_case3_all(n, j).unwrap() {
                    assert!(member.verify(), "{member}");
                }
            }
            if let Some(member) = gen_delta4_case1(n).unwrap() {
                assert!(member.verify(), "{member}");
            }
        }
    }

    #[test]
    fn display_formats() {
        let member = gen_delta4_case3(8, 6, &[7]).unwrap();
        assert_eq!(
            member.to_string(),
            "delta4-case-iii[j=6, placement={7}]: (1,6,7,8,2,3,4,5)"
        );
        let member = gen_delta3_j3(5).unwrap().remove(0);
        assert_eq!(member.to_string(), "delta3-j3[t=1]: (1,3,4,5,2)");
    }
}
