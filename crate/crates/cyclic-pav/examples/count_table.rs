// Totals from the exhaustive oracle next to the closed forms, for every
// filter the formulas cover. `cargo run --example count_table`

use cyclic_pav::{callan_vella_total, count_brute, total_formula, ClassQuery, Result};

fn main() -> Result<()> {
    println!("{:>3} {:>6} {:>8} {:>8}", "n", "k", "oracle", "formula");
    for n in 5..=10 {
        for k in [Some(3), Some(4), Some(5), None] {
            let report = count_brute(&ClassQuery::with_1432(n, k)?)?;
            let formula = match k {
                Some(k) => total_formula(n, k)?.known(),
                None => callan_vella_total(n).known(),
            };
            let k_label = k.map_or("none".to_string(), |k| k.to_string());
            let marker = if formula == Some(report.total) {
                ""
            } else {
                "  MISMATCH"
            };
            println!(
                "{n:>3} {k_label:>6} {:>8} {:>8}{marker}",
                report.total,
                formula.map_or("-".to_string(), |v| v.to_string()),
            );
        }
        println!();
    }
    Ok(())
}
