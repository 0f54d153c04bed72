//! Central series of every built-in group.

use sbgroups::catalog;
use sbgroups::series::central_series;

fn main() {
    println!("{:<9} {:>5} {:>8} {:>10} {:>9} {:>11}", "group", "order", "perfect", "nilpotent", "|last|", "|hyper|");
    for g in catalog::all() {
        let s = central_series(&g);
        println!(
            "{:<9} {:>5} {:>8} {:>10} {:>9} {:>11}",
            g.label(),
            g.order(),
            s.perfect,
            s.nilpotent,
            s.last_term.len(),
            s.hypercenter.len()
        );
    }
}
