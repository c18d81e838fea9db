//! Monic orthogonal polynomials of a moment sequence, their three-term
//! recurrence `P_{n+1}(y) = (y + s_n) P_n(y) - t_n P_{n-1}(y)`, and the
//! derivative-sequence limit method.
//!
//! The moment functional sends `y^k` to `c_k`; polynomials in `y` are
//! stored as [`Poly`] with `y` as the indeterminate.

mod derivative;

use serde::{Deserialize, Serialize};

pub use derivative::{derivative_families, derivative_family, derivative_limit_hankel, DerivativeFamily};

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, Term};
use crate::hankel::det;
use crate::sequences::numbers::binomial;
use crate::sequences::SequenceSpec;

/// `s_0..s_N`, `t_1..t_N` (stored from index 0, so `t[0]` is `t_1`) and
/// `zeta_0..zeta_N` with `zeta_0 = 1`, `zeta_n = H_n / H_{n-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceCoeffs {
    pub s: Vec<Term>,
    pub t: Vec<Term>,
    pub zeta: Vec<Term>,
}

impl RecurrenceCoeffs {
    /// `t_n` for `n >= 1`.
    pub fn t_at(&self, n: usize) -> Option<&Term> {
        n.checked_sub(1).and_then(|i| self.t.get(i))
    }
}

/// `<y^r p(y)>` under `y^k -> c_k`.
pub fn functional(moments: &[Rational], p: &Poly, r: usize) -> Rational {
    p.coeffs().iter().enumerate().map(|(i, a)| a * &moments[i + r]).sum()
}

struct Extraction {
    s: Vec<Rational>,
    t: Vec<Rational>,
    h: Vec<Rational>,
    polys: Vec<Poly>,
}

/// Runs the orthogonality conditions up to order `n_max`. With
/// `last_s` also computes `s_{n_max}` (which needs `H_{n_max} != 0` and
/// the moment `c_{2 n_max + 1}`).
fn extract(c: &[Rational], n_max: usize, last_s: bool) -> Result<Extraction> {
    let needed = 2 * n_max + usize::from(last_s) + 1;
    if c.len() < needed {
        return Err(Error::InvalidParameters(format!("need {needed} moments, have {}", c.len())));
    }
    let y = Poly::x();
    let mut out = Extraction { s: vec![], t: vec![], h: vec![], polys: vec![Poly::one()] };
    let mut prev = Poly::zero();
    for n in 0..=n_max {
        let p = out.polys[n].clone();
        let h = functional(c, &p, n);
        let t_n = if n == 0 {
            Rational::zero()
        } else {
            let t = h.checked_div(&out.h[n - 1]).map_err(|_| Error::DegenerateMoments { order: n - 1 })?;
            out.t.push(t.clone());
            t
        };
        out.h.push(h.clone());
        if n == n_max && !last_s {
            break;
        }
        if h.is_zero() {
            return Err(Error::DegenerateMoments { order: n });
        }
        let s_n = (&t_n * functional(c, &prev, n) - functional(c, &p, n + 1)) / &h;
        out.s.push(s_n.clone());
        if n == n_max {
            break;
        }
        let next = &(&(&y + &Poly::constant(s_n)) * &p) - &prev.scale(&t_n);
        prev = p;
        out.polys.push(next);
    }
    Ok(out)
}

fn to_coeffs(e: Extraction) -> RecurrenceCoeffs {
    let zeta = e
        .h
        .iter()
        .enumerate()
        .map(|(n, h)| Term::Scalar(if n == 0 { Rational::one() } else { h.clone() }))
        .collect();
    RecurrenceCoeffs {
        s: e.s.into_iter().map(Term::Scalar).collect(),
        t: e.t.into_iter().map(Term::Scalar).collect(),
        zeta,
    }
}

/// `s_0..s_N`, `t_1..t_N` from the moments `c_0..c_{2N+1}`.
pub fn recurrence_from_terms(moments: &[Rational], order: usize) -> Result<RecurrenceCoeffs> {
    Ok(to_coeffs(extract(moments, order, true)?))
}

/// `t_1..t_n` (and `s_0..s_{n-1}`) from `c_0..c_{2n}`, enough for `H_n`.
/// Only `H_0..H_{n-1}` must be nonzero.
pub fn recurrence_coeffs_t_only(moments: &[Rational], n: usize) -> Result<RecurrenceCoeffs> {
    Ok(to_coeffs(extract(moments, n, false)?))
}

/// Scalar moments of `spec`, evaluating the free variable at `at` if the
/// sequence is polynomial.
pub fn scalar_moments(spec: &SequenceSpec, count: usize, at: Option<&Rational>) -> Result<Vec<Rational>> {
    let spec = match (spec.is_polynomial(), at) {
        (true, Some(x)) => spec.at(x),
        (true, None) => {
            return Err(Error::InvalidParameters(format!(
                "`{}` depends on x; choose a point to evaluate it at",
                spec.name
            )))
        }
        (false, _) => spec.clone(),
    };
    (0..count as u64)
        .map(|k| spec.resolve(k).map(|t| t.as_scalar().expect("scalar sequence")))
        .collect()
}

/// Recurrence coefficients of `spec` up to order `order`.
pub fn recurrence_from_moments(spec: &SequenceSpec, order: usize, at: Option<&Rational>) -> Result<RecurrenceCoeffs> {
    recurrence_from_terms(&scalar_moments(spec, 2 * order + 2, at)?, order)
}

/// Monic orthogonal polynomials `P_0..P_N` in `y`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonicOps {
    pub polys: Vec<Poly>,
}

/// `P_0..P_N` via the recurrence.
pub fn monic_ops_from_terms(moments: &[Rational], order: usize) -> Result<MonicOps> {
    if order == 0 {
        return Ok(MonicOps { polys: vec![Poly::one()] });
    }
    let e = extract(moments, order - 1, true)?;
    let c = to_coeffs(e);
    let y = Poly::x();
    let mut polys = vec![Poly::one()];
    let mut prev = Poly::zero();
    for n in 0..order {
        let s = c.s[n].to_poly();
        let t = if n == 0 { Poly::zero() } else { c.t[n - 1].to_poly() };
        let next = &(&(&y + &s) * &polys[n]) - &(&t * &prev);
        prev = polys[n].clone();
        polys.push(next);
    }
    Ok(MonicOps { polys })
}

pub fn monic_ops(spec: &SequenceSpec, order: usize, at: Option<&Rational>) -> Result<MonicOps> {
    monic_ops_from_terms(&scalar_moments(spec, 2 * order + 1, at)?, order)
}

/// `P_n(y)` as a bordered Hankel determinant divided by `H_{n-1}`; the
/// last row is `1, y, ..., y^n`. Limited to `n <= 6`.
pub fn bordered_determinant(moments: &[Rational], n: usize) -> Result<Poly> {
    if n > 6 {
        return Err(Error::InvalidParameters("bordered determinant is limited to n <= 6".into()));
    }
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut rows: Vec<Vec<Poly>> =
        (0..n).map(|i| (0..=n).map(|j| Poly::constant(moments[i + j].clone())).collect()).collect();
    rows.push((0..=n).map(|j| Poly::monomial(Rational::one(), j)).collect());
    let num = det::bareiss(rows)?.value;
    let minor: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| moments[i + j].clone()).collect()).collect();
    let h = det::gauss(minor).value;
    if h.is_zero() {
        return Err(Error::DegenerateMoments { order: n - 1 });
    }
    Ok(num.scale(&h.recip()?))
}

/// `c_0^{n+1} prod_{l=1}^{n} t_l^{n+1-l}`.
pub fn hankel_from_recurrence(c0: &Term, coeffs: &RecurrenceCoeffs, n: usize) -> Result<Term> {
    if coeffs.t.len() < n {
        return Err(Error::InsufficientCoefficients { needed: n, available: coeffs.t.len() });
    }
    let mut acc = c0.pow(n as u32 + 1);
    for l in 1..=n {
        acc = acc * coeffs.t[l - 1].pow((n + 1 - l) as u32);
    }
    Ok(acc)
}

/// Closed-form recurrence of the moments `B_{2k+1}((x+1)/2)`:
/// `s_n = C(n+1,2) - (x^2-1)/4` and
/// `t_n = n^4 (n^2 - x^2) / (4(2n+1)(2n-1))`, for `n <= order`.
pub fn builtin_recurrence_bern_odd(order: usize) -> RecurrenceCoeffs {
    let quarter = Rational::new(1, 4);
    let x2 = Poly::monomial(Rational::one(), 2);
    let s = (0..=order)
        .map(|n| {
            let c = Rational::from(binomial(n as u64 + 1, 2));
            Term::Poly(&Poly::constant(c + &quarter) - &x2.scale(&quarter))
        })
        .collect();
    let t: Vec<Term> = (1..=order)
        .map(|n| {
            let n = n as i64;
            let den = Rational::from(4 * (2 * n + 1) * (2 * n - 1));
            let num = &Poly::constant(Rational::from(n * n)) - &x2;
            Term::Poly(num.scale(&(Rational::from(n.pow(4)) / den)))
        })
        .collect();
    let c0 = Term::Poly(Poly::monomial(Rational::new(1, 2), 1));
    // zeta_n = c_0 t_1 ... t_n
    let mut zeta = vec![Term::Poly(Poly::one())];
    let mut acc = c0;
    for tn in &t {
        acc = acc * tn;
        zeta.push(acc.clone());
    }
    RecurrenceCoeffs { s, t, zeta }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::hankel::hankel_det;
    use crate::sequences::parse_spec;

    fn moments(name: &str, count: usize) -> Vec<Rational> {
        scalar_moments(&parse_spec(name).unwrap(), count, None).unwrap()
    }

    #[test]
    fn order_zero() {
        let c = moments("B_k", 2);
        let r = recurrence_from_terms(&c, 0).unwrap();
        assert_eq!(r.s, vec![Term::Scalar(rat(1, 2))]);
        assert!(r.t.is_empty());
        assert_eq!(r.zeta, vec![Term::Scalar(rat(1, 1))]);
    }

    #[test]
    fn bern_odd_at_half() {
        let c = moments("B_{2k+1}(3/4)", 10);
        let r = recurrence_from_terms(&c, 3).unwrap();
        let t: Vec<Term> = [rat(1, 16), rat(1, 1), rat(81, 16)].into_iter().map(Term::Scalar).collect();
        assert_eq!(r.t, t);
        for n in 0..=3u64 {
            let expect = Rational::from(binomial(n + 1, 2)) + rat(3, 16);
            assert_eq!(r.s[n as usize], Term::Scalar(expect));
        }
        let b = builtin_recurrence_bern_odd(5);
        for n in 1..=5 {
            assert_eq!(b.t[n - 1].eval_at(&rat(1, 2)), rat(n as i64, 1).pow(4) / rat(16, 1));
        }
        assert_eq!(b.s[0], Term::Poly(Poly::new(vec![rat(1, 4), rat(0, 1), rat(-1, 4)])));
        assert_eq!(b.t[0], Term::Poly(Poly::new(vec![rat(1, 12), rat(0, 1), rat(-1, 12)])));
    }

    #[test]
    fn product_matches_determinants() {
        for name in ["E_k", "B_k", "B_{k+1}", "B_{2k+1}(3/4)", "E_{k+1}(1)/(k+1)!"] {
            let c = moments(name, 12);
            let r = recurrence_from_terms(&c, 5).unwrap();
            for n in 0..=5 {
                let h = hankel_det(&parse_spec(name).unwrap(), n).unwrap().value;
                assert_eq!(hankel_from_recurrence(&Term::Scalar(c[0].clone()), &r, n).unwrap(), h, "{name} {n}");
                if n >= 1 {
                    let prev = hankel_det(&parse_spec(name).unwrap(), n - 1).unwrap().value;
                    assert_eq!(r.zeta[n].clone() * prev, h);
                }
            }
        }
    }

    #[test]
    fn orthogonality_and_bordered_formula() {
        let c = moments("E_k", 14);
        let ops = monic_ops_from_terms(&c, 4).unwrap();
        for (n, p) in ops.polys.iter().enumerate() {
            assert_eq!(p.degree(), Some(n));
            assert!(p.leading().unwrap().is_one());
            for r in 0..n {
                assert!(functional(&c, p, r).is_zero(), "n={n} r={r}");
            }
            assert_eq!(&bordered_determinant(&c, n).unwrap(), p);
        }
        assert_eq!(ops.polys[1], Poly::x());
    }

    #[test]
    fn degenerate_moments() {
        let c = moments("kE_{k-1}", 6);
        assert_eq!(recurrence_from_terms(&c, 2).unwrap_err(), Error::DegenerateMoments { order: 0 });
        assert!(hankel_from_recurrence(&Term::Scalar(rat(1, 1)), &builtin_recurrence_bern_odd(1), 3).is_err());
    }
}
