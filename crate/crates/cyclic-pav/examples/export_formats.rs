// Writes the oracle-vs-formula verification table in every supported
// format — CSV, JSON, and an OEIS-style b-file — into the system temp
// directory, then echoes the head of each file.
//
//     cargo run --example export_formats

use cyclic_pav::{bfile_lines, rows_to_csv, rows_to_json, verification_table};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir();
    let rows = verification_table(5, 9, &[Some(3), Some(4), Some(5)], 8)?;

    let csv_path = dir.join("cyclic-pav-table.csv");
    std::fs::write(&csv_path, rows_to_csv(&rows))?;

    let json_path = dir.join("cyclic-pav-table.json");
    std::fs::write(&json_path, rows_to_json(&rows))?;

    // The k >= 5 totals match OEIS A088921; b-file lines are "n a(n)".
    let bfile_path = dir.join("cyclic-pav-b088921.txt");
    std::fs::write(&bfile_path, bfile_lines(5, 5, 16)?)?;

    for path in [&csv_path, &json_path, &bfile_path] {
        let text = std::fs::read_to_string(path)?;
        println!("{} ({} bytes)", path.display(), text.len());
        for line in text.lines().take(4) {
            println!("  {line}");
        }
        println!();
    }
    Ok(())
}
