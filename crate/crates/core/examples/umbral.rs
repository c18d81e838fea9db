// The four-parameter umbral family `B^{n+2} (B+1)_{a-1} (B+1)_{b-1} (-B+1)_{c-1} (-B+1)_{d-1}`.
//
// cargo run --example umbral

use appell_hankel::closed_forms::identity;
use appell_hankel::closed_forms::umbral::{fk_expr, fk_moment};
use appell_hankel::hankel::hankel_det;
use appell_hankel::sequences::names::umbral;
use appell_hankel::Result;

pub fn run_example() -> Result<()> {
    println!("fk(1,2,1,1) at n = 0: {}", fk_expr(1, 2, 1, 1, 0)?);
    for (a, b, c, d) in [(1, 1, 1, 1), (1, 2, 1, 1), (2, 2, 1, 1), (2, 2, 2, 2), (1, 1, 0, 0)] {
        let moments: Vec<String> = (0..6).map(|k| fk_moment(a, b, c, d, k).map(|m| m.to_string())).collect::<Result<_>>()?;
        let spec = umbral(a, b, c, d)?;
        let id = identity(&spec.name)?;
        let hs: Vec<String> = (0..=3)
            .map(|n| {
                let h = hankel_det(&spec, n)?.value;
                assert_eq!(h, id.eval(n)?);
                Ok(h.to_string())
            })
            .collect::<Result<_>>()?;
        println!("{}: moments {}\n    H_0..H_3 {}", spec.name, moments.join(" "), hs.join(", "));
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
