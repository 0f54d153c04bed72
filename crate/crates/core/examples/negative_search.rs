//! Bounded search for homogeneous two-variable monomials fixing a nontrivial
//! element, on nilpotent groups (none exist) and on S3 (found quickly).

use sbgroups::catalog;
use sbgroups::monomial::{exhaust_report, DEFAULT_WORD_CAP};

fn main() -> sbgroups::Result<()> {
    for (g, len) in [(catalog::q8(), 4), (catalog::dihedral(4), 4), (catalog::cyclic(6), 4), (catalog::s3(), 4)] {
        let r = exhaust_report(&g, len, DEFAULT_WORD_CAP)?;
        println!(
            "{:<4} len<={len}: {} words, {} homogeneous, no witness: {}",
            g.label(),
            r.words_examined,
            r.homogeneous_words,
            r.no_witness
        );
        if let Some(c) = &r.counterexample {
            println!("     counterexample: {}", serde_json::to_string(c)?);
        }
    }
    Ok(())
}
