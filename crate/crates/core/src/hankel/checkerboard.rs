use serde::{Deserialize, Serialize};

use super::{det_matrix, Algorithm};
use crate::error::{Error, Result};
use crate::exact::{Domain, Rational, Term};

/// Which parity of `i + j` carries the (possibly) nonzero entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Support {
    Even,
    Odd,
}

/// A checkerboard determinant written as a product of two half-size
/// determinants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckerboardSplit {
    pub support: Support,
    pub dimension: usize,
    /// Even support: `det(M[2i][2j])`. Odd support: `det(M[2i+1][2j])`.
    pub first: Option<Term>,
    /// Even support: `det(M[2i+1][2j+1])`. Odd support: `det(M[2i][2j+1])`.
    pub second: Option<Term>,
    /// `+1`, or `(-1)^{N/2}` for odd support and even dimension `N`.
    pub sign: i32,
    pub total: Term,
}

fn submatrix(m: &[Vec<Term>], row0: usize, col0: usize) -> Vec<Vec<Term>> {
    m.iter()
        .skip(row0)
        .step_by(2)
        .map(|r| r.iter().skip(col0).step_by(2).cloned().collect())
        .collect()
}

fn det(m: &[Vec<Term>]) -> Result<Term> {
    if m.is_empty() {
        return Ok(Term::one());
    }
    Ok(det_matrix(m, Algorithm::FractionFreeBareiss)?.value)
}

fn support_of(m: &[Vec<Term>]) -> Option<Support> {
    let vanishes_on = |parity: usize| {
        m.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, v)| (i + j) % 2 != parity || v.is_zero()))
    };
    if vanishes_on(1) {
        Some(Support::Even)
    } else if vanishes_on(0) {
        Some(Support::Odd)
    } else {
        None
    }
}

/// Splits the determinant of a square matrix whose entries vanish on one
/// parity class of `i + j`.
pub fn checkerboard_split(m: &[Vec<Term>]) -> Result<CheckerboardSplit> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidParameters("matrix is not square".into()));
    }
    let support = support_of(m).ok_or(Error::NotCheckerboard)?;
    let zero_like = || m.first().and_then(|r| r.first()).map_or(Term::zero(), |t| t.like(Rational::zero()));
    let (first, second, sign, total) = match support {
        Support::Even => {
            let a = det(&submatrix(m, 0, 0))?;
            let b = det(&submatrix(m, 1, 1))?;
            let t = &a * &b;
            (Some(a), Some(b), 1, t)
        }
        Support::Odd if n % 2 == 1 => (None, None, 1, zero_like()),
        Support::Odd => {
            let c = det(&submatrix(m, 1, 0))?;
            let d = det(&submatrix(m, 0, 1))?;
            let sign = if (n / 2).is_multiple_of(2) { 1 } else { -1 };
            let t = (&c * &d).scale(&Rational::from(sign));
            (Some(c), Some(d), sign, t)
        }
    };
    Ok(CheckerboardSplit { support, dimension: n, first, second, sign, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Poly};

    fn t(v: i64) -> Term {
        Term::Scalar(rat(v, 1))
    }

    #[test]
    fn two_by_two_odd() {
        // [[0, d], [a, 0]] with symbolic a = x, d = x + 1
        let a = Term::Poly(Poly::x());
        let d = Term::Poly(Poly::from_ints(&[1, 1]));
        let m = vec![vec![Term::Poly(Poly::zero()), d.clone()], vec![a.clone(), Term::Poly(Poly::zero())]];
        let s = checkerboard_split(&m).unwrap();
        assert_eq!(s.support, Support::Odd);
        assert_eq!(s.total, -(&a * &d));
    }

    #[test]
    fn three_by_three_odd_is_zero() {
        let m = vec![vec![t(0), t(1), t(0)], vec![t(2), t(0), t(3)], vec![t(0), t(4), t(0)]];
        let s = checkerboard_split(&m).unwrap();
        assert!(s.total.is_zero());
        assert!(s.first.is_none());
    }

    #[test]
    fn even_support_reassembles() {
        let m = vec![
            vec![t(2), t(0), t(1), t(0)],
            vec![t(0), t(3), t(0), t(5)],
            vec![t(7), t(0), t(1), t(0)],
            vec![t(0), t(1), t(0), t(4)],
        ];
        let s = checkerboard_split(&m).unwrap();
        assert_eq!(s.first, Some(t(2 - 7)));
        assert_eq!(s.second, Some(t(12 - 5)));
        assert_eq!(s.total, det_matrix(&m, Algorithm::Cofactor).unwrap().value);
    }

    #[test]
    fn odd_support_sign() {
        for n in [2usize, 4, 6] {
            let m: Vec<Vec<Term>> = (0..n)
                .map(|i| (0..n).map(|j| if (i + j) % 2 == 1 { t((i * 3 + j * j + 1) as i64) } else { t(0) }).collect())
                .collect();
            let s = checkerboard_split(&m).unwrap();
            assert_eq!(s.sign, if (n / 2) % 2 == 0 { 1 } else { -1 });
            assert_eq!(s.total, det_matrix(&m, Algorithm::RationalGauss).unwrap().value, "n = {n}");
        }
    }

    #[test]
    fn rejects_full_matrix() {
        let m = vec![vec![t(1), t(1)], vec![t(1), t(1)]];
        assert_eq!(checkerboard_split(&m).unwrap_err(), Error::NotCheckerboard);
    }
}
