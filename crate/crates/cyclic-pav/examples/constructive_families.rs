// Generates every catalogued member family at one size, re-verifies each
// against the definitional membership test, and compares the family sizes
// with the refined counting formulas.
//
//     cargo run --example constructive_families

use cyclic_pav::{
    delta3_refined_formula, delta4_case_formula, gen_delta3_j3, gen_delta3_unique,
    gen_delta4_case1, gen_delta4_case3_all, Delta4Case, Result,
};

fn main() -> Result<()> {
    let n = 9;

    println!("k = 3, n = {n}");
    let j3 = gen_delta3_j3(n)?;
    for member in &j3 {
        let ok = if member.verify() { "ok" } else { "FAIL" };
        println!("  {member} {ok}");
    }
    assert_eq!(
        Some(j3.len() as u64),
        delta3_refined_formula(n, 3)?.known(),
        "the j = 3 generator hits the whole slice"
    );
    let mut j = 4;
    while 2 * j - 3 <= n {
        let member = gen_delta3_unique(n, j)?;
        let ok = if member.verify() { "ok" } else { "FAIL" };
        println!("  {member} {ok}");
        assert_eq!(Some(1), delta3_refined_formula(n, j)?.known());
        j += 1;
    }

    println!("\nk = 4, n = {n}");
    if let Some(member) = gen_delta4_case1(n)? {
        println!("  {member}");
    } else {
        println!("  interleaved case-i member: none (n odd)");
    }
    for j in 4..=n - 2 {
        let batch = gen_delta4_case3_all(n, j)?;
        for member in &batch {
            let ok = if member.verify() { "ok" } else { "FAIL" };
            println!("  {member} {ok}");
        }
        assert_eq!(
            Some(batch.len() as u64),
            delta4_case_formula(n, Some(j), Delta4Case::III)?.known(),
            "free placement catalogue is exactly 2^(n-j-1) at j = {j}"
        );
    }
    // At j = n−1 the free-placement window is empty; the lone member the
    // generator still produces lands in the j = n−1 slice instead.
    for member in gen_delta4_case3_all(n, n - 1)? {
        let ok = if member.verify() { "ok" } else { "FAIL" };
        println!("  {member} {ok}");
    }
    Ok(())
}
