// Checks every registered closed form and writes a JSON report.
//
// cargo run --release --example verify_catalog [-- out.json]

use std::collections::BTreeMap;
use std::error::Error;

use appell_hankel::verify::{all_passed, to_json, to_plain, verify_all, verify_identity};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let one = verify_identity("Hn_B2k+1_poly", Some(4), &[("x".into(), "5/7".into())])?;
    println!("{}", to_plain(std::slice::from_ref(&one)));

    let reports = verify_all(Some(4), &BTreeMap::new())?;
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.id.as_str()).collect();
    println!("{} identities checked, failures: {failed:?}", reports.len());
    assert!(all_passed(&reports));

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, to_json(&reports)?)?;
        println!("report written to {path}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
