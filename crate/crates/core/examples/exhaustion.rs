//! Closure steps needed to cover `Nⁿ` from a witness seed family.

use sbgroups::catalog;
use sbgroups::monomial::find_witness;
use sbgroups::product::{exhaustion_experiment, witness_seed, DEFAULT_CLOSURE_CAP};
use sbgroups::series::central_series;

fn main() -> sbgroups::Result<()> {
    for g in [catalog::s3(), catalog::a4()] {
        let w = find_witness(&g)?;
        let target = central_series(&g).last_term;
        for n in 1..=3 {
            let seed = witness_seed(&w, n);
            let outcome = exhaustion_experiment(&g, n, &seed, &target, DEFAULT_CLOSURE_CAP)?;
            println!("{}^{n}: seed {} -> {:?}", g.label(), seed.len(), outcome);
        }
    }
    Ok(())
}
