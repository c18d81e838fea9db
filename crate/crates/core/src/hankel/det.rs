//! Determinant engines over a [`Domain`].

use crate::error::Result;
use crate::exact::{Domain, Rational};

/// Determinant with its elimination step count.
pub struct Counted<T> {
    pub value: T,
    pub steps: u64,
}

/// Moves a nonzero entry of column `k` (rows `k..`) into row `k`. Returns
/// `None` if the column tail is zero, otherwise whether rows were swapped.
fn pivot<T: Domain>(m: &mut [Vec<T>], k: usize) -> Option<bool> {
    let p = (k..m.len()).find(|&i| !m[i][k].is_zero())?;
    if p != k {
        m.swap(p, k);
    }
    Some(p != k)
}

/// Ordinary Gaussian elimination over the rationals.
pub fn gauss(mut m: Vec<Vec<Rational>>) -> Counted<Rational> {
    let n = m.len();
    let mut det = Rational::one();
    let mut steps = 0;
    for k in 0..n {
        match pivot(&mut m, k) {
            None => return Counted { value: Rational::zero(), steps },
            Some(true) => det = -det,
            Some(false) => {}
        }
        let p = m[k][k].clone();
        det *= &p;
        let inv = p.recip().expect("pivot is nonzero");
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] * &inv;
            for j in k + 1..n {
                let sub = &f * &m[k][j];
                m[i][j] -= &sub;
                steps += 1;
            }
        }
    }
    Counted { value: det, steps }
}

/// Fraction-free (Bareiss) elimination. Every division is checked to be
/// exact; a failure means the input violated the domain assumptions.
pub fn bareiss<T: Domain>(mut m: Vec<Vec<T>>) -> Result<Counted<T>> {
    let n = m.len();
    if n == 0 {
        return Ok(Counted { value: T::one(), steps: 0 });
    }
    let mut negate = false;
    let mut prev = T::one();
    let mut steps = 0;
    for k in 0..n - 1 {
        match pivot(&mut m, k) {
            None => return Ok(Counted { value: T::zero(), steps }),
            Some(swapped) => negate ^= swapped,
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].times(&m[k][k]).minus(&m[i][k].times(&m[k][j]));
                m[i][j] = num.div_exact(&prev)?;
                steps += 1;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(Counted { value: if negate { d.negated() } else { d }, steps })
}

/// Laplace expansion along the first row. Exponential; for cross-checks on
/// small matrices only.
pub fn cofactor<T: Domain>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = T::zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = a.times(&cofactor(&minor));
        acc = if j % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Poly};

    fn r(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|row| row.iter().map(|v| rat(*v, 1)).collect()).collect()
    }

    #[test]
    fn small_matrices() {
        let m = r(&[&[1, 0], &[0, -1]]);
        assert_eq!(gauss(m.clone()).value, rat(-1, 1));
        assert_eq!(bareiss(m.clone()).unwrap().value, rat(-1, 1));
        assert_eq!(cofactor(&m), rat(-1, 1));
        let swap = r(&[&[0, 1], &[1, 0]]);
        assert_eq!(gauss(swap.clone()).value, rat(-1, 1));
        assert_eq!(bareiss(swap).unwrap().value, rat(-1, 1));
        let b = vec![vec![rat(1, 1), rat(-1, 2)], vec![rat(-1, 2), rat(1, 6)]];
        assert_eq!(gauss(b.clone()).value, rat(-1, 12));
        assert_eq!(bareiss(b).unwrap().value, rat(-1, 12));
    }

    #[test]
    fn singular_and_empty() {
        let m = r(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert!(gauss(m.clone()).value.is_zero());
        assert!(bareiss(m.clone()).unwrap().value.is_zero());
        assert!(cofactor(&m).is_zero());
        let z = r(&[&[0, 0], &[0, 0]]);
        assert!(bareiss(z).unwrap().value.is_zero());
        assert_eq!(bareiss::<Rational>(vec![]).unwrap().value, rat(1, 1));
    }

    #[test]
    fn polynomial_entries() {
        let x = Poly::x();
        let one = Poly::one();
        // det [[x, 1], [1, x]] = x^2 - 1
        let m = vec![vec![x.clone(), one.clone()], vec![one.clone(), x.clone()]];
        let d = bareiss(m.clone()).unwrap().value;
        assert_eq!(d, Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(cofactor(&m), d);
        // needs a pivot swap: [[0, x], [1, 1]] = -x
        let m = vec![vec![Poly::zero(), x.clone()], vec![one.clone(), one]];
        assert_eq!(bareiss(m).unwrap().value, -&x);
    }
}
