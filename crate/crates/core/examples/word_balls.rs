//! Word balls and the power implication `G ⊆ (K_n)^m ⟹ G ⊆ K_{nm}`.

use sbgroups::catalog;
use sbgroups::product::{check_ball_power, word_ball};

fn main() -> sbgroups::Result<()> {
    for g in [catalog::s3(), catalog::a4(), catalog::s4(), catalog::a5()] {
        let sizes: Vec<usize> =
            (1..=8).map(|r| word_ball(&g, g.generators(), r).map(|b| b.len())).collect::<Result<_, _>>()?;
        let mut ok = true;
        for n in 1..=6 {
            for m in 1..=6 {
                ok &= check_ball_power(&g, g.generators(), n, m)?;
            }
        }
        println!("{:<3} |K_r| for r=1..8: {:?}  implication holds for n,m<=6: {ok}", g.label(), sizes);
    }
    Ok(())
}
