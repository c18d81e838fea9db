// Hankel determinants of derivative sequences as limits of ratios.
//
// A polynomial family `A_k(x)` with a common root `x0` has
// `H_n(A_k'(x0))` equal to a limit of known determinants; each family
// below maps to a scalar target sequence.
//
// cargo run --example derivative_method

use appell_hankel::hankel::hankel_det;
use appell_hankel::orthopoly::derivative_families;
use appell_hankel::Result;

pub fn run_example() -> Result<()> {
    for fam in derivative_families() {
        println!("{} at x = {} -> {}", fam.family, fam.x0, fam.target);
        let target = fam.target_spec();
        for n in 0..=4 {
            let via_limit = fam.hankel_via_limit(n)?;
            let direct = hankel_det(&target, n)?.value;
            println!("  H_{n}: limit {via_limit}, direct {direct}");
            assert_eq!(appell_hankel::Term::Scalar(via_limit), direct);
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
