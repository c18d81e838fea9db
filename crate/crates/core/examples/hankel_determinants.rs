// Hankel matrices and the determinant engines.
//
// cargo run --example hankel_determinants

use appell_hankel::hankel::{det_exact, hankel_det, hankel_matrix, Algorithm};
use appell_hankel::{parse_spec, rat, Result};

pub fn run_example() -> Result<()> {
    let spec = parse_spec("E_k")?;
    let m = hankel_matrix(&spec, 3)?;
    println!("H_3(E_k) matrix:\n{m}");
    for alg in [
        Algorithm::RationalGauss,
        Algorithm::FractionFreeBareiss,
        Algorithm::Cofactor,
        Algorithm::CheckerboardSplit,
        Algorithm::RecurrenceProduct,
    ] {
        let d = det_exact(&m, alg)?;
        println!("{alg:?}: {} ({} steps)", d.value, d.elimination_steps);
    }

    println!();
    for name in ["B_k", "B_{k+1}", "B_{2k}(1/2)", "E_{k+1}"] {
        let spec = parse_spec(name)?;
        let hs: Vec<String> = (0..=5).map(|n| hankel_det(&spec, n).map(|d| d.value.to_string())).collect::<Result<_>>()?;
        println!("{name:<12} H_0..H_5 = {}", hs.join(", "));
    }

    // polynomial entries stay polynomial; the determinant is exact in x
    let poly = parse_spec("B_k(x)")?;
    for n in 0..=3 {
        let h = hankel_det(&poly, n)?.value;
        println!("H_{n}(B_k(x)) = {h}   at x = 7/3: {}", h.eval_at(&rat(7, 3)));
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
