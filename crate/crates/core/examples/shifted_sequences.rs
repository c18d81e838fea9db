// `H_n(c_{k+1}) = d_n H_n(c_k)` with `d_n` from the recurrence of `c_k`.
//
// cargo run --example shifted_sequences

use appell_hankel::hankel::shift_relation_check;
use appell_hankel::{parse_spec, Result};

pub fn run_example() -> Result<()> {
    for name in ["B_k", "E_k(1/3)", "B_{2k}(1/2)", "B_{2k+1}((x+1)/2)"] {
        let spec = parse_spec(name)?;
        for n in 1..=4 {
            let c = shift_relation_check(&spec, n)?;
            println!(
                "{name:<18} n={n} H_n(shifted) = {}  d_n = {}  H_n = {}  holds: {}",
                c.shifted, c.dn, c.base, c.holds
            );
            assert_eq!(c.dn, c.dn_determinant);
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
