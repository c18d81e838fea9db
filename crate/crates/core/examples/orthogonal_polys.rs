// Three-term recurrences from moments, and `H_n` as a product of the `t_l`.
//
// cargo run --example orthogonal_polys

use appell_hankel::exact::Term;
use appell_hankel::hankel::hankel_det;
use appell_hankel::orthopoly::{
    bordered_determinant, hankel_from_recurrence, monic_ops, recurrence_from_moments, scalar_moments,
};
use appell_hankel::{parse_spec, rat, Result};

pub fn run_example() -> Result<()> {
    let spec = parse_spec("B_{k+1}")?;
    let rec = recurrence_from_moments(&spec, 4, None)?;
    for n in 0..=4 {
        let t = rec.t_at(n).map_or("-".to_string(), |t| t.to_string());
        println!("n={n} s={} t={t} zeta={}", rec.s[n], rec.zeta[n]);
    }

    let c0 = spec.resolve(0)?;
    for n in 0..=4 {
        let product = hankel_from_recurrence(&c0, &rec, n)?;
        println!("H_{n}: product {product}, elimination {}", hankel_det(&spec, n)?.value);
    }

    let ops = monic_ops(&spec, 3, None)?;
    let moments = scalar_moments(&spec, 7, None)?;
    for (n, p) in ops.polys.iter().enumerate() {
        println!("P_{n}(y) = {p}");
        assert_eq!(*p, bordered_determinant(&moments, n)?);
    }

    // a polynomial sequence needs a point before its moments are scalar
    let at = rat(1, 3);
    let rec = recurrence_from_moments(&parse_spec("E_k(x)")?, 3, Some(&at))?;
    let t: Vec<String> = rec.t.iter().map(Term::to_string).collect();
    println!("E_k(1/3): t_1..t_3 = {}", t.join(", "));
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
