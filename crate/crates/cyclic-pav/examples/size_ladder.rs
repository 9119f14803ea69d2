// Walks the two size-changing bijections that chain consecutive sizes
// together, and confirms both directions against the exhaustive oracle.
//
// Deleting the letter 2 (and renumbering) maps the j = 2 slice of size n
// onto all of size n−1, for every k. Deleting a trailing letter n maps the
// members whose cycle form ends (n−1, n) onto the size-(n−1) members
// ending in n−1, slice by slice in j.
//
//     cargo run --example size_ladder

use cyclic_pav::{
    append_max, count_brute, delete_letter_two, delete_trailing_max, insert_letter_two, is_member,
    members, ClassQuery, Result,
};

fn main() -> Result<()> {
    println!("letter-2 bijection: a(n, j=2) = a(n-1)");
    println!("{:>6} {:>4} {:>10} {:>10}", "k", "n", "j=2 slice", "a(n-1)");
    for k in [Some(3), Some(4), None] {
        for n in 6..=9 {
            let smaller = members(&ClassQuery::with_1432(n - 1, k)?)?;
            let query = ClassQuery::with_1432(n, k)?;
            // Lift every smaller member and land exactly on the j = 2 slice.
            let mut lifted = 0u64;
            for cf in &smaller {
                let up = insert_letter_two(cf);
                assert_eq!(up.second(), Some(2));
                assert!(is_member(&up, &query));
                assert_eq!(&delete_letter_two(&up)?, cf, "round trip");
                lifted += 1;
            }
            let report = count_brute(&query)?;
            assert_eq!(lifted, report.j_count(2));
            let k_label = k.map_or("none".to_string(), |k| k.to_string());
            println!(
                "{k_label:>6} {n:>4} {:>10} {:>10}",
                report.j_count(2),
                lifted
            );
        }
    }

    println!("\ntrailing-max bijection for k = 4, per slice j:");
    println!(
        "{:>4} {:>4} {:>14} {:>16}",
        "n", "j", "ends (n-1,n)", "ends n-1 below"
    );
    for n in 7..=9u32 {
        let query = ClassQuery::with_1432(n as usize, Some(4))?;
        let below = ClassQuery::with_1432(n as usize - 1, Some(4))?;
        for j in 3..=n - 2 {
            let tall: Vec<_> = members(&query)?
                .into_iter()
                .filter(|cf| {
                    let w = cf.letters();
                    cf.second() == Some(j) && w[w.len() - 2] == n - 1 && w[w.len() - 1] == n
                })
                .collect();
            let short: Vec<_> = members(&below)?
                .into_iter()
                .filter(|cf| cf.second() == Some(j) && *cf.letters().last().unwrap() == n - 1)
                .collect();
            for cf in &tall {
                let down = delete_trailing_max(cf)?;
                assert!(short.contains(&down));
                assert_eq!(&append_max(&down), cf, "round trip");
            }
            assert_eq!(tall.len(), short.len());
            println!("{n:>4} {j:>4} {:>14} {:>16}", tall.len(), short.len());
        }
    }
    Ok(())
}
