//! Verification tables: brute-force counts lined up against the closed
//! forms, with CSV / JSON / b-file serialization.
//!
//! Row order and all serialized bytes are deterministic: they depend only on
//! the requested ranges, never on thread scheduling.

use crate::enumeration::{self, CountReport, Delta4Case, MAX_ORACLE_N};
use crate::error::{Error, Result};
use crate::formulas::{self, Delta4Part};
use crate::patterns::Pattern;

/// One comparison row: a brute-force tally next to the formula value for
/// the same slice of the class, when a formula is asserted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRow {
    pub n: usize,
    /// `None` means no one-line δk filter ("none" in serialized form).
    pub k: Option<usize>,
    /// Which slice: "total", a second-letter value, "tail", or a case tag
    /// like "iii(5)".
    pub label: String,
    pub brute: u64,
    /// `None` serializes as "n/a": no formula asserted for this slice.
    pub formula: Option<u64>,
    /// True iff a formula is present and agrees with the brute count.
    pub matches: bool,
}

impl VerificationRow {
    fn new(
        n: usize,
        k: Option<usize>,
        label: impl Into<String>,
        brute: u64,
        formula: Option<u64>,
    ) -> Self {
        VerificationRow {
            n,
            k,
            label: label.into(),
            brute,
            formula,
            matches: formula == Some(brute),
        }
    }
}

/// Whether to keep rows for which no formula is asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowPolicy {
    /// Keep every row; formula-less rows serialize as "n/a" and count as
    /// non-matching only for display, not for verification verdicts.
    All,
    /// Keep only rows with an asserted formula (the verification set).
    FormulaBacked,
}

fn is_1432(tau: &Pattern) -> bool {
    tau.values() == [1, 4, 3, 2]
}

fn total_formula_for(report: &CountReport) -> Option<u64> {
    if !is_1432(&report.tau) {
        return None;
    }
    match report.k {
        None => formulas::callan_vella_total(report.n).known(),
        Some(k) => formulas::total_formula(report.n, k)
            .ok()
            .and_then(|v| v.known()),
    }
}

fn per_j_formula_for(report: &CountReport, j: usize) -> Option<u64> {
    if !is_1432(&report.tau) {
        return None;
    }
    match report.k {
        Some(3) => formulas::delta3_refined_formula(report.n, j)
            .ok()
            .and_then(|v| v.known()),
        Some(4) => {
            let part = match j {
                2 => Delta4Part::J2,
                3 => Delta4Part::J3,
                _ => return None,
            };
            formulas::delta4_refined_formula(report.n, part)
                .ok()
                .and_then(|v| v.known())
        }
        _ => None,
    }
}

/// Flattens a [`CountReport`] into comparison rows: the total, then
/// (optionally) the per-j refinement, then (optionally) the δ4 case split.
pub fn count_rows(
    report: &CountReport,
    include_per_j: bool,
    include_cases: bool,
    policy: RowPolicy,
) -> Vec<VerificationRow> {
    let n = report.n;
    let k = report.k;
    let mut rows = vec![VerificationRow::new(
        n,
        k,
        "total",
        report.total,
        total_formula_for(report),
    )];

    if include_per_j {
        for (&j, &count) in &report.per_j {
            rows.push(VerificationRow::new(
                n,
                k,
                j.to_string(),
                count,
                per_j_formula_for(report, j as usize),
            ));
        }
        if k == Some(4) && is_1432(&report.tau) {
            rows.push(VerificationRow::new(
                n,
                k,
                "tail",
                report.tail_count(),
                formulas::delta4_refined_formula(n, Delta4Part::Tail)
                    .ok()
                    .and_then(|v| v.known()),
            ));
        }
    }

    if include_cases && report.delta4_cases.is_some() {
        let case_formula = |j: Option<usize>, case: Delta4Case| {
            formulas::delta4_case_formula(n, j, case)
                .ok()
                .and_then(|v| v.known())
        };
        let brute = |j: Option<usize>, case: Delta4Case| {
            report.case_count(j, case).expect("case map present")
        };
        rows.push(VerificationRow::new(
            n,
            k,
            "i",
            brute(None, Delta4Case::I),
            case_formula(None, Delta4Case::I),
        ));
        rows.push(VerificationRow::new(
            n,
            k,
            "ii",
            brute(None, Delta4Case::II),
            case_formula(None, Delta4Case::II),
        ));
        for case in [Delta4Case::III, Delta4Case::IV] {
            for j in 4..=n.saturating_sub(2) {
                rows.push(VerificationRow::new(
                    n,
                    k,
                    format!("{}({j})", case.label()),
                    brute(Some(j), case),
                    case_formula(Some(j), case),
                ));
            }
        }
        rows.push(VerificationRow::new(
            n,
            k,
            "n-1",
            brute(None, Delta4Case::JEqNMinus1),
            case_formula(None, Delta4Case::JEqNMinus1),
        ));
        rows.push(VerificationRow::new(
            n,
            k,
            "n",
            brute(None, Delta4Case::JEqN),
            case_formula(None, Delta4Case::JEqN),
        ));
    }

    match policy {
        RowPolicy::All => rows,
        RowPolicy::FormulaBacked => rows.into_iter().filter(|r| r.formula.is_some()).collect(),
    }
}

/// Runs the oracle for every (n, k) in range and returns the
/// formula-backed comparison rows, in (n, then given k order) sequence.
///
/// `parts` is forwarded to the partitioned oracle; the rows are identical
/// for every value.
pub fn verification_table(
    n_min: usize,
    n_max: usize,
    ks: &[Option<usize>],
    parts: usize,
) -> Result<Vec<VerificationRow>> {
    if n_min < 5 || n_min > n_max || n_max > MAX_ORACLE_N {
        return Err(Error::Domain(format!(
            "verification needs 5 <= n_min <= n_max <= {MAX_ORACLE_N}, got [{n_min}, {n_max}]"
        )));
    }
    if ks.is_empty() {
        return Err(Error::Domain("at least one k is required".into()));
    }
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        for &k in ks {
            let query = crate::avoidance::ClassQuery::with_1432(n, k)?;
            let report = enumeration::count_brute_partitioned(&query, parts)?;
            rows.extend(count_rows(&report, true, true, RowPolicy::FormulaBacked));
        }
    }
    Ok(rows)
}

fn k_str(k: Option<usize>) -> String {
    match k {
        Some(k) => k.to_string(),
        None => "none".into(),
    }
}

fn formula_str(formula: Option<u64>) -> String {
    match formula {
        Some(v) => v.to_string(),
        None => "n/a".into(),
    }
}

/// CSV with the exact header `n,k,j,brute,formula,match`, one row per line,
/// newline-terminated.
pub fn rows_to_csv(rows: &[VerificationRow]) -> String {
    let mut out = String::from("n,k,j,brute,formula,match\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n,
            k_str(r.k),
            r.label,
            r.brute,
            formula_str(r.formula),
            r.matches
        ));
    }
    out
}

/// Parses the output of [`rows_to_csv`] back into rows.
pub fn parse_csv(text: &str) -> Result<Vec<VerificationRow>> {
    let bad = |line: &str, why: &str| Error::Domain(format!("CSV {why}: {line:?}"));
    let mut lines = text.lines();
    match lines.next() {
        Some("n,k,j,brute,formula,match") => {}
        other => {
            return Err(bad(other.unwrap_or(""), "header mismatch"));
        }
    }
    let mut rows = Vec::new();
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(bad(line, "expected 6 fields"));
        }
        let n: usize = fields[0].parse().map_err(|_| bad(line, "bad n"))?;
        let k = match fields[1] {
            "none" => None,
            v => Some(v.parse().map_err(|_| bad(line, "bad k"))?),
        };
        let brute: u64 = fields[3].parse().map_err(|_| bad(line, "bad brute"))?;
        let formula = match fields[4] {
            "n/a" => None,
            v => Some(v.parse().map_err(|_| bad(line, "bad formula"))?),
        };
        let matches = match fields[5] {
            "true" => true,
            "false" => false,
            _ => return Err(bad(line, "bad match")),
        };
        rows.push(VerificationRow {
            n,
            k,
            label: fields[2].to_string(),
            brute,
            formula,
            matches,
        });
    }
    Ok(rows)
}

/// JSON array of row objects with fields `n`, `k`, `j`, `brute`, `formula`,
/// `match`; numbers where defined, `"none"` / `"n/a"` otherwise.
pub fn rows_to_json(rows: &[VerificationRow]) -> String {
    let array: Vec<serde_json::Value> = rows
        .iter()
        .map(|r| {
            serde_json::json!({
                "n": r.n,
                "k": match r.k {
                    Some(k) => serde_json::json!(k),
                    None => serde_json::json!("none"),
                },
                "j": r.label,
                "brute": r.brute,
                "formula": match r.formula {
                    Some(v) => serde_json::json!(v),
                    None => serde_json::json!("n/a"),
                },
                "match": r.matches,
            })
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&array).expect("plain data serializes");
    text.push('\n');
    text
}

/// OEIS-style b-file lines `n a(n)` for the total formula at the given k,
/// newline-terminated.
pub fn bfile_lines(k: usize, n_min: usize, n_max: usize) -> Result<String> {
    if n_min < 5 || n_min > n_max || n_max > formulas::MAX_FORMULA_N {
        return Err(Error::Domain(format!(
            "b-file range needs 5 <= n_min <= n_max <= {}, got [{n_min}, {n_max}]",
            formulas::MAX_FORMULA_N
        )));
    }
    let mut out = String::new();
    for n in n_min..=n_max {
        let value = formulas::total_formula(n, k)?
            .known()
            .expect("range restricted to the formula domain");
        out.push_str(&format!("{n} {value}\n"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::avoidance::ClassQuery;
    use crate::enumeration::count_brute;

    #[test]
    fn count_rows_reference_table() {
        let query = ClassQuery::with_1432(6, Some(3)).unwrap();
        let report = count_brute(&query).unwrap();
        let rows = count_rows(&report, true, true, RowPolicy::All);
        let find = |label: &str| rows.iter().find(|r| r.label == label).unwrap();
        assert_eq!(find("total").brute, 9);
        assert_eq!(find("2").brute, 6);
        assert_eq!(find("3").brute, 2);
        assert_eq!(find("4").brute, 1);
        assert!(rows.iter().all(|r| r.formula.is_none() || r.matches));
    }

    #[test]
    fn generic_tau_rows_have_no_formula() {
        let tau = crate::patterns::Pattern::parse("1342").unwrap();
        let query = ClassQuery::new(6, Some(3), tau).unwrap();
        let report = count_brute(&query).unwrap();
        let rows = count_rows(&report, true, true, RowPolicy::All);
        assert!(rows.iter().all(|r| r.formula.is_none() && !r.matches));
        assert!(count_rows(&report, true, true, RowPolicy::FormulaBacked).is_empty());
    }

    #[test]
    fn delta4_rows_include_cases() {
        let query = ClassQuery::with_1432(6, Some(4)).unwrap();
        let report = count_brute(&query).unwrap();
        let rows = count_rows(&report, true, true, RowPolicy::FormulaBacked);
        let labels: Vec<&str> = rows.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(
            labels,
            vec!["total", "2", "3", "tail", "i", "ii", "iii(4)", "iv(4)", "n-1", "n"]
        );
        assert!(rows.iter().all(|r| r.matches), "{rows:?}");
    }

    #[test]
    fn verification_rows_all_match_small() {
        let rows = verification_table(5, 6, &[Some(3), Some(4), Some(5)], 2).unwrap();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r.matches), "{rows:?}");
        assert!(verification_table(4, 6, &[Some(3)], 1).is_err());
        assert!(verification_table(5, 13, &[Some(3)], 1).is_err());
    }

    #[test]
    fn csv_round_trip_and_shape() {
        let rows = verification_table(5, 6, &[Some(3), Some(4)], 1).unwrap();
        let text = rows_to_csv(&rows);
        assert!(text.starts_with("n,k,j,brute,formula,match\n"));
        assert!(text.ends_with('\n'));
        assert_eq!(parse_csv(&text).unwrap(), rows);
    }

    #[test]
    fn csv_exact_bytes_for_total_row() {
        let row = VerificationRow::new(5, Some(3), "total", 6, Some(6));
        assert_eq!(
            rows_to_csv(&[row]),
            "n,k,j,brute,formula,match\n5,3,total,6,6,true\n"
        );
        let row = VerificationRow::new(7, None, "total", 80, None);
        assert_eq!(
            rows_to_csv(&[row]),
            "n,k,j,brute,formula,match\n7,none,total,80,n/a,false\n"
        );
    }

    #[test]
    fn csv_parse_rejects_malformed() {
        assert!(parse_csv("nope\n").is_err());
        assert!(parse_csv("n,k,j,brute,formula,match\n1,2\n").is_err());
        assert!(parse_csv("n,k,j,brute,formula,match\nx,3,total,6,6,true\n").is_err());
    }

    #[test]
    fn json_field_names() {
        let row = VerificationRow::new(5, Some(3), "total", 6, Some(6));
        let text = rows_to_json(&[row]);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let obj = &parsed[0];
        assert_eq!(obj["n"], 5);
        assert_eq!(obj["k"], 3);
        assert_eq!(obj["j"], "total");
        assert_eq!(obj["brute"], 6);
        assert_eq!(obj["formula"], 6);
        assert_eq!(obj["match"], true);
    }

    #[test]
    fn bfile_reference_lines() {
        let text = bfile_lines(5, 5, 7).unwrap();
        assert_eq!(text, "5 13\n6 33\n7 80\n");
        assert!(bfile_lines(5, 4, 7).is_err());
        assert!(bfile_lines(2, 5, 7).is_err());
    }
}
