// Named sequences: numbers, polynomials, shifts, characters.
//
// cargo run --example sequences

use appell_hankel::sequences::{
    bernoulli_number, euler_number, gen_bernoulli_number, parse_spec, tangent_number, zigzag_number,
    DirichletCharacter,
};
use appell_hankel::{rat, Result};

pub fn run_example() -> Result<()> {
    let b: Vec<String> = (0..=10).map(|k| bernoulli_number(k).to_string()).collect();
    println!("B_0..B_10:  {}", b.join(" "));
    let e: Vec<String> = (0..=10).map(|k| euler_number(k).to_string()).collect();
    println!("E_0..E_10:  {}", e.join(" "));

    // zigzag numbers come from the boustrophedon, tangent numbers from B_{2k}
    for k in 1..=5 {
        println!("T_{k} = {:>6}   A_{} = {}", tangent_number(k), 2 * k - 1, zigzag_number(2 * k - 1));
    }

    for name in ["B_k(x)", "E_{2k+1}((x+1)/2)", "kE_{k-1}", "(2^{2k+2}-1)B_{2k+2}", "S_k(s=3)", "T_k(s=2)"] {
        let spec = parse_spec(name)?;
        let terms: Vec<String> = spec.terms(4)?.iter().map(|t| t.to_string()).collect();
        println!("{name:<22} {}", terms.join(", "));
    }

    let at = parse_spec("E_k(x)")?.at(&rat(1, 2));
    println!("E_k(1/2):   {:?}", at.terms(6)?.iter().map(|t| t.to_string()).collect::<Vec<_>>());

    for label in DirichletCharacter::builtin_labels() {
        let chi = DirichletCharacter::builtin(label).expect("listed label");
        let vals: Vec<String> = (1..=7).map(|n| gen_bernoulli_number(n, &chi).to_string()).collect();
        println!("{label:<8} mod {:<2} conductor {:<2} B_1..B_7: {}", chi.modulus(), chi.conductor(), vals.join(" "));
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
