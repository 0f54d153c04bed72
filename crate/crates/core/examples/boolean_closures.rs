//! Closure operators on families of subsets of a small universe.

use sbgroups::boolean::{check_rnd2n_part1, check_rnd2n_part2, iterate, op_d, op_i, op_r, op_v, ring_closure, symmetrize, BoolFamily};

fn main() -> sbgroups::Result<()> {
    let f = symmetrize(&BoolFamily::singletons(4)?);
    println!("F = {:?} ({} sets)", f.masks(), f.len());
    for n in 1..=3 {
        println!(
            "n={n}: |R^n F|={:>2} |D^n F|={:>2} |I_n F|={:>2} |V_n F|={:>2}",
            iterate(op_r, &f, n).len(),
            iterate(op_d, &f, n).len(),
            op_i(n, &f)?.len(),
            op_v(n, &f)?.len()
        );
    }
    println!("ring closure has {} sets", ring_closure(&f).len());
    for n in 1..=2 {
        println!("R^{n} within D^{}: {}   D^{n} within V(I(F)): {}", 2 * n, check_rnd2n_part1(&f, n)?, check_rnd2n_part2(&f, n)?);
    }
    Ok(())
}
