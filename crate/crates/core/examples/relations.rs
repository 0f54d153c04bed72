//! Product-group relations satisfied by the lifted witness monomial.

use sbgroups::catalog;
use sbgroups::monomial::find_witness;
use sbgroups::product::verify_relations;

fn main() -> sbgroups::Result<()> {
    for (g, n) in [(catalog::s3(), 4), (catalog::a4(), 3), (catalog::a5(), 3)] {
        let w = find_witness(&g)?;
        let r = verify_relations(&w, n)?;
        println!("{}^{n}:", g.label());
        for eq in &r.equations {
            println!("  {:<18} {:>5} checked, {} failures", eq.name, eq.checked, eq.failures);
        }
    }
    Ok(())
}
