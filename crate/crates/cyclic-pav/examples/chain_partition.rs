// Decreasing-subsequence width and minimum chain covers in one-line
// notation. The hand-built covers for two constructed families are checked
// against the generic patience-sorting cover, then every member at one size
// gets the Dilworth equality width = cover size confirmed.
//
//     cargo run --example chain_partition

use cyclic_pav::{
    delta3_unique_cover, delta4_case3_cover, gen_delta3_unique, gen_delta4_case3,
    max_antichain_size, members, min_chain_cover, verify_chain_cover, ClassQuery, Result,
};

fn main() -> Result<()> {
    // The unique j = 5 member at n = 9 for k = 3 splits into two increasing
    // chains, written down directly from its shape.
    let member = gen_delta3_unique(9, 5)?;
    let one_line = member.cf.to_one_line();
    let cover = delta3_unique_cover(9, 5)?;
    println!("{member}");
    println!("  one-line {one_line}");
    println!("  width {}", max_antichain_size(&one_line));
    for chain in cover.chains() {
        println!("  chain {chain:?}");
    }
    assert!(verify_chain_cover(&one_line, &cover));

    // A k = 4 member built by free placement splits into three chains by
    // cutting the cycle word at the letter n.
    let member = gen_delta4_case3(9, 6, &[7, 8])?;
    let one_line = member.cf.to_one_line();
    let cover = delta4_case3_cover(&member.cf)?;
    println!("\n{member}");
    println!("  one-line {one_line}");
    println!("  width {}", max_antichain_size(&one_line));
    for chain in cover.chains() {
        println!("  chain {chain:?}");
    }
    assert!(verify_chain_cover(&one_line, &cover));

    // Dilworth across a whole size: minimum cover size equals width.
    let mut by_width = [0usize; 5];
    for cf in members(&ClassQuery::with_1432(8, Some(4))?)? {
        let p = cf.to_one_line();
        let width = max_antichain_size(&p);
        let cover = min_chain_cover(&p);
        assert_eq!(cover.size(), width);
        assert!(verify_chain_cover(&p, &cover));
        by_width[width] += 1;
    }
    println!("\nn = 8, k = 4 members by width:");
    for (width, count) in by_width.iter().enumerate().filter(|(_, &c)| c > 0) {
        println!("  width {width}: {count}");
    }
    Ok(())
}
