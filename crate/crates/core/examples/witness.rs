//! Witnesses `f(a, b) = b` for the non-nilpotent built-in groups.

use sbgroups::catalog;
use sbgroups::monomial::{evaluate, find_witness};

fn main() -> sbgroups::Result<()> {
    for label in ["S3", "D5", "A4", "S4", "A5", "SL(2,3)", "S3xZ2"] {
        let g = catalog::by_label(label).expect("built-in");
        let w = find_witness(&g)?;
        let image = evaluate(&g, &w.f, &[w.a, w.b])?;
        println!(
            "{label:<8} a={:<3} b={:<3} |f|={:<3} f(a,b)=b: {}  checks: {:?}",
            w.a,
            w.b,
            w.f.len(),
            image == w.b,
            w.check()
        );
    }
    let s3 = catalog::s3();
    println!("\nS3 monomial: {}", find_witness(&s3)?.f);
    Ok(())
}
