// Exhaustively checks the three structural equivalences behind the fast
// membership test, over every cycle form up to a given size:
//
//   rotations   — all rotations of the cycle word avoid 1432
//                 iff the word itself avoids 321 and 2143
//   structure   — for c₂ ≥ 3, the two-pattern condition collapses to three
//                 monotonicity constraints on letter positions
//   width       — members never contain a decreasing subsequence of
//                 length 5 in one-line notation
//
//     cargo run --example equivalence_sweep [n_max]

use cyclic_pav::{
    check_rotation_equivalence, check_structure_equivalence, check_width_bound, Result,
};

fn main() -> Result<()> {
    let n_max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n_max must be an integer"))
        .unwrap_or(7);

    let sweeps = [
        ("rotations", check_rotation_equivalence(n_max)?),
        ("structure", check_structure_equivalence(n_max.max(5))?),
        ("width", check_width_bound(n_max)?),
    ];
    for (name, sweep) in sweeps {
        print!("{name:<10} checked {:>6} cycle forms: ", sweep.checked);
        if sweep.holds() {
            println!("no counterexamples");
        } else {
            println!("{} COUNTEREXAMPLES", sweep.counterexamples.len());
            for cf in sweep.counterexamples.iter().take(5) {
                println!("  {cf}");
            }
        }
    }
    Ok(())
}
