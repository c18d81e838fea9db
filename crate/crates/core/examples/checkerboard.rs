// Splitting a determinant whose entries vanish on one parity of `i + j`.
//
// cargo run --example checkerboard

use appell_hankel::hankel::{checkerboard_split, det_matrix, hankel_matrix, Algorithm};
use appell_hankel::{parse_spec, Result};

pub fn run_example() -> Result<()> {
    // E_k has zero odd moments (even support); kE_{k-1} has zero even ones.
    for name in ["E_k", "kE_{k-1}"] {
        let spec = parse_spec(name)?;
        for n in 1..=6 {
            let rows = hankel_matrix(&spec, n)?.rows();
            let split = checkerboard_split(&rows)?;
            let plain = det_matrix(&rows, Algorithm::FractionFreeBareiss)?.value;
            let show = |t: &Option<appell_hankel::Term>| t.as_ref().map_or("-".to_string(), |v| v.to_string());
            println!(
                "{name:<9} n={n} {:?} sign {:+} first {} second {} total {} elimination {}",
                split.support,
                split.sign,
                show(&split.first),
                show(&split.second),
                split.total,
                plain
            );
            assert_eq!(split.total, plain);
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
