//! Loading groups from a JSON catalog and running CLI commands programmatically.

use sbgroups::cli::{cmd_analyze, cmd_diameter, Catalog, GensChoice};

const CATALOG: &str = r#"[
    {"label": "V4", "order": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]], "expected": {"nilpotent": true}},
    {"label": "S3", "degree": 3, "generators": [[1,0,2],[1,2,0]], "expected": {"perfect": false, "nilpotent": false}},
    {"label": "icosahedral", "builtin": "A5", "expected": {"perfect": true}}
]"#;

fn main() -> sbgroups::Result<()> {
    let catalog = Catalog::new(serde_json::from_str(CATALOG)?)?;
    for entry in catalog.entries() {
        let report = cmd_analyze(&catalog, &entry.label)?;
        println!("{}: passed={} results={}", entry.label, report.passed, report.results["pinned"]);
    }
    let d = cmd_diameter(&catalog, "S3", 2, &GensChoice::Standard, true)?;
    println!("{}", d.stable_json());
    Ok(())
}
