//! Cyclic permutations under simultaneous pattern constraints in one-line
//! and cycle notation.
//!
//! A cyclic permutation π of {1, …, n} — a single n-cycle — has a standard
//! cycle form (1, c₂, …, cₙ), the cycle written starting from 1. This crate
//! studies the permutations whose one-line notation avoids the decreasing
//! pattern δk = k(k−1)⋯21 while *every* rotation of the cycle word avoids
//! 1432, and packages everything needed to check the counting results at
//! desk scale:
//!
//! * membership tests, including the collapse of the rotation condition to
//!   "the cycle word avoids 321 and 2143" ([`avoidance`]);
//! * an exhaustive oracle with per-j refinement, a δ4 case classifier, and
//!   deterministic parallel partitioning ([`enumeration`]);
//! * closed-form counts with explicit validity domains ([`formulas`]) —
//!   for k = 3 the totals ⌊(n²+7)/2⌋ − 2n sit in OEIS A061925, and for
//!   k ≥ 5 they coincide with A088921;
//! * size-changing bijections and fully parametrized member families
//!   ([`families`]);
//! * decreasing-subsequence width and minimum chain covers ([`chains`]);
//! * verification tables comparing oracle against formula, exportable as
//!   CSV, JSON, or OEIS b-file lines ([`report`]).
//!
//! ```
//! use cyclic_pav::{count_brute, total_formula, ClassQuery};
//!
//! let query = ClassQuery::with_1432(6, Some(3))?;
//! let report = count_brute(&query)?;
//! assert_eq!(report.total, 9);
//! assert_eq!(total_formula(6, 3)?.known(), Some(9));
//! # Ok::<(), cyclic_pav::Error>(())
//! ```
//!
//! The `examples/` directory exercises each capability end to end:
//! `count_table` (totals vs. formulas), `refined_breakdown` (per-j and δ4
//! cases), `equivalence_sweep` (the three exhaustive equivalences),
//! `chain_partition` (width and covers), `constructive_families`
//! (generators and bijections), `size_ladder` (recurrence walk), and
//! `export_formats` (CSV / JSON / b-file output).

pub mod avoidance;
pub mod chains;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod formulas;
pub mod patterns;
pub mod perm;
pub mod report;

pub use avoidance::{
    all_rotations_avoid, avoids_321_and_2143, is_member, structure_conditions_hold, ClassQuery,
};
pub use chains::{max_antichain_size, min_chain_cover, verify_chain_cover, ChainCover};
pub use enumeration::{
    check_rotation_equivalence, check_structure_equivalence, check_width_bound, classify_delta4,
    count_brute, count_brute_partitioned, for_each_cycle_form, members, CountReport, Delta4Case,
    SweepReport, MAX_ORACLE_N,
};
pub use error::{Error, Result};
pub use families::{
    append_max, delete_letter_two, delete_trailing_max, delta3_unique_cover, delta4_case3_cover,
    gen_delta3_j3, gen_delta3_unique, gen_delta4_case1, gen_delta4_case3, gen_delta4_case3_all,
    insert_letter_two, Construction, FamilyMember,
};
pub use formulas::{
    callan_vella_total, delta3_refined_formula, delta4_case_formula, delta4_refined_formula,
    total_formula, Delta4Part, FormulaValue, MAX_FORMULA_N,
};
pub use patterns::{avoiding_123_and_321, s4_avoiding_123_and_321, Pattern, Word};
pub use perm::{CycleForm, Permutation};
pub use report::{
    bfile_lines, count_rows, parse_csv, rows_to_csv, rows_to_json, verification_table, RowPolicy,
    VerificationRow,
};
