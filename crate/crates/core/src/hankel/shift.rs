use serde::{Deserialize, Serialize};

use super::{det_matrix, hankel_det, Algorithm};
use crate::error::{Error, Result};
use crate::exact::{Domain, Rational, Term};
use crate::orthopoly::{builtin_recurrence_bern_odd, recurrence_from_moments, RecurrenceCoeffs};
use crate::sequences::{normalize, SequenceSpec};

/// `d_n` by `d_{n+1} = -s_{n+1} d_n - t_{n+1} d_{n-1}`, `d_{-1} = 1`,
/// `d_0 = -s_0`.
pub fn shift_factor_dn(coeffs: &RecurrenceCoeffs, n: usize) -> Result<Term> {
    if coeffs.s.len() < n + 1 || coeffs.t.len() < n {
        return Err(Error::InsufficientCoefficients {
            needed: n + 1,
            available: coeffs.s.len().min(coeffs.t.len() + 1),
        });
    }
    let mut prev = coeffs.s[0].like(Rational::one());
    let mut cur = -&coeffs.s[0];
    for k in 1..=n {
        let next = -(&coeffs.s[k] * &cur) - &coeffs.t[k - 1] * &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The tridiagonal matrix with diagonal `-s_0..-s_n`, superdiagonal `1`
/// and subdiagonal `t_1..t_n`; its determinant is `d_n`.
pub fn shift_factor_matrix(coeffs: &RecurrenceCoeffs, n: usize) -> Result<Vec<Vec<Term>>> {
    if coeffs.s.len() < n + 1 || coeffs.t.len() < n {
        return Err(Error::InsufficientCoefficients { needed: n + 1, available: coeffs.s.len() });
    }
    let zero = coeffs.s[0].like(Rational::zero());
    let one = coeffs.s[0].like(Rational::one());
    Ok((0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    if i == j {
                        -&coeffs.s[i]
                    } else if j == i + 1 {
                        one.clone()
                    } else if i == j + 1 {
                        coeffs.t[j].clone()
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect())
}

/// Both sides of `H_n(c_{k+1}) = d_n H_n(c_k)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShiftCheck {
    pub shifted: Term,
    pub dn: Term,
    /// `d_n` as the explicit tridiagonal determinant.
    pub dn_determinant: Term,
    pub base: Term,
    pub holds: bool,
}

/// Checks the shift relation. Scalar sequences use recurrence coefficients
/// extracted from their moments; `B_{2k+1}((x+1)/2)` uses its closed-form
/// coefficients and is checked as a polynomial identity.
pub fn shift_relation_check(spec: &SequenceSpec, n: usize) -> Result<ShiftCheck> {
    let coeffs = if spec.is_polynomial() {
        if normalize(&spec.name) != normalize("B_{2k+1}((x+1)/2)") {
            return Err(Error::InvalidParameters(format!(
                "no symbolic recurrence available for `{}`",
                spec.name
            )));
        }
        builtin_recurrence_bern_odd(n)
    } else {
        recurrence_from_moments(spec, n, None)?
    };
    let dn = shift_factor_dn(&coeffs, n)?;
    let dn_determinant = det_matrix(&shift_factor_matrix(&coeffs, n)?, Algorithm::FractionFreeBareiss)?.value;
    let base = hankel_det(spec, n)?.value;
    let shifted = hankel_det(&spec.shifted(1), n)?.value;
    let holds = shifted == dn.times(&base) && dn == dn_determinant;
    Ok(ShiftCheck { shifted, dn, dn_determinant, base, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{cancel_and_eval_limit, rat, Poly};
    use crate::sequences::parse_spec;

    #[test]
    fn small_cases() {
        let c = RecurrenceCoeffs {
            s: vec![Term::Scalar(rat(2, 1)), Term::Scalar(rat(3, 1))],
            t: vec![Term::Scalar(rat(5, 1))],
            zeta: vec![],
        };
        assert_eq!(shift_factor_dn(&c, 0).unwrap(), Term::Scalar(rat(-2, 1)));
        assert_eq!(shift_factor_dn(&c, 1).unwrap(), Term::Scalar(rat(2 * 3 - 5, 1)));
        assert!(shift_factor_dn(&c, 2).is_err());
    }

    #[test]
    fn relation_holds() {
        let e = shift_relation_check(&parse_spec("E_k").unwrap(), 1).unwrap();
        assert!(e.holds);
        assert_eq!(e.shifted, Term::Scalar(rat(-1, 1)));
        assert!(shift_relation_check(&parse_spec("B_k").unwrap(), 2).unwrap().holds);
        assert!(shift_relation_check(&parse_spec("B_{2k+1}((x+1)/2)").unwrap(), 2).unwrap().holds);
    }

    #[test]
    fn limits_at_minus_one() {
        let c = builtin_recurrence_bern_odd(3);
        let den = Poly::from_ints(&[-1, 0, 1]);
        let lim = |n| cancel_and_eval_limit(&shift_factor_dn(&c, n).unwrap().to_poly(), &den, &rat(-1, 1)).unwrap();
        assert_eq!(lim(2), rat(3, 10));
        assert_eq!(lim(3), rat(-36, 35));
    }
}
