// Refines one size's count by the second letter j of the cycle form, and —
// for k = 4 — splits the j ≥ 4 tail into its structural cases.
//
//     cargo run --example refined_breakdown [n]

use cyclic_pav::report::{count_rows, RowPolicy};
use cyclic_pav::{count_brute, ClassQuery, Result};

fn main() -> Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be an integer"))
        .unwrap_or(9);

    for k in [3, 4] {
        let query = ClassQuery::with_1432(n, Some(k))?;
        let report = count_brute(&query)?;
        println!("n = {n}, k = {k}: {} members", report.total);
        for row in count_rows(&report, true, true, RowPolicy::All) {
            let formula = row.formula.map_or("-".to_string(), |v| v.to_string());
            println!("  j = {:<8} {:>6} {:>8}", row.label, row.brute, formula);
        }
        println!();
    }
    Ok(())
}
