// Evaluating registered closed forms next to the brute-force determinant.
//
// cargo run --example closed_forms

use appell_hankel::closed_forms::{identity, registry, Group};
use appell_hankel::hankel::hankel_det;
use appell_hankel::Result;

pub fn run_example() -> Result<()> {
    for id in ["all:B_k", "Hn_Ek", "odd:kE_{k-1}", "H_Bchi(q=4)", "H_Sk(s=2)", "Hn_B2k+1_poly"] {
        let cf = identity(id)?;
        println!("{id}: {}  [{}]", cf.formula, cf.citation);
        for n in 0..=4 {
            let closed = cf.eval(n)?;
            let brute = hankel_det(&cf.sequence, n)?.value;
            println!("  n={n}: {closed}{}", if closed == brute { "" } else { "  (differs)" });
        }
    }

    let mut per_group = std::collections::BTreeMap::new();
    for cf in registry() {
        *per_group.entry(format!("{:?}", cf.group)).or_insert(0) += 1;
    }
    println!("\nregistry by group: {per_group:?}");
    let odd = registry().into_iter().filter(|c| c.group == Group::TableOddOnly).count();
    println!("odd-only table rows: {odd}");
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
