//! Diameters of `Gⁿ` with respect to the union of the factor copies of `G`.

use sbgroups::catalog;
use sbgroups::product::{cayley_diameter, GeneratingSet};

fn main() -> sbgroups::Result<()> {
    for (g, max_n) in [(catalog::s3(), 5), (catalog::a4(), 3), (catalog::a5(), 3)] {
        for n in 1..=max_n {
            let gens = GeneratingSet::union_of_factors(&g, n);
            let d = cayley_diameter(&g, n, &gens)?;
            println!("{}^{n}: {} states, diameter {}, histogram {:?}", g.label(), d.states_visited, d.diameter, d.histogram);
        }
    }
    Ok(())
}
