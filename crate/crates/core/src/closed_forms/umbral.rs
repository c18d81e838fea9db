//! Umbral Bernoulli calculus: expand a polynomial in the symbol `B`, then
//! replace every `B^j` by the Bernoulli number `B_j`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::sequences::numbers::{bernoulli_number, factorial};

/// Laurent polynomial in the umbral symbol `B`.
///
/// Negative exponents are allowed only so that `(-B+1)_{-1} = 1/(-B)` can be
/// written down; [`umbral_eval`] rejects any that survive expansion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UmbralExpr {
    terms: BTreeMap<i64, Rational>,
}

impl UmbralExpr {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c * B^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        UmbralExpr { terms }
    }

    /// `B^e`.
    pub fn power(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// `sign*B + shift`.
    pub fn linear(sign: i64, shift: i64) -> Self {
        let mut e = Self::monomial(Rational::from(sign), 1);
        e.add_term(0, Rational::from(shift));
        e
    }

    fn add_term(&mut self, e: i64, c: Rational) {
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Shifted factorial `(sign*B + 1)_j` for `j >= -1`, where
    /// `(sign*B + 1)_{-1}` is `1/(sign*B)`.
    pub fn shifted_factorial(sign: i64, j: i64) -> Result<Self> {
        if j < -1 || !(sign == 1 || sign == -1) {
            return Err(Error::InvalidParameters(format!("shifted factorial ({sign}B+1)_{j}")));
        }
        if j == -1 {
            return Ok(Self::monomial(Rational::from(sign), -1));
        }
        Ok((0..j).fold(Self::one(), |acc, i| &acc * &Self::linear(sign, 1 + i)))
    }
}

impl Mul for &UmbralExpr {
    type Output = UmbralExpr;
    fn mul(self, rhs: &UmbralExpr) -> UmbralExpr {
        let mut out = UmbralExpr::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for UmbralExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(e, c)| format!("{c}*B^{e}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Replaces `B^j` by `B_j` and sums.
pub fn umbral_eval(expr: &UmbralExpr) -> Result<Rational> {
    if let Some(e) = expr.min_exponent().filter(|e| *e < 0) {
        return Err(Error::NegativeUmbralExponent(e));
    }
    Ok(expr.terms().map(|(e, c)| c * bernoulli_number(e as usize)).sum())
}

/// `B^{n+2} (B+1)_{a-1} (B+1)_{b-1} (-B+1)_{c-1} (-B+1)_{d-1}`.
pub fn fk_expr(a: u64, b: u64, c: u64, d: u64, n: u64) -> Result<UmbralExpr> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameters("need a, b >= 1".into()));
    }
    let mut e = UmbralExpr::power(n as i64 + 2);
    for (sign, j) in [(1, a), (1, b), (-1, c), (-1, d)] {
        e = &e * &UmbralExpr::shifted_factorial(sign, j as i64 - 1)?;
    }
    Ok(e)
}

/// The `n`-th moment of the four-parameter umbral family.
pub fn fk_moment(a: u64, b: u64, c: u64, d: u64, n: u64) -> Result<Rational> {
    umbral_eval(&fk_expr(a, b, c, d, n)?)
}

fn fact(n: u64) -> Rational {
    Rational::from(factorial(n))
}

/// Closed form for the Hankel determinant of order `n` of the family above:
/// `(-1)^{C(n+1,2)} P^{n+1} prod_{l=1}^{n} F(l)^{n+1-l}` with
/// `P = (a+c-1)!(b+c-1)!(a+d-1)!(b+d-1)!/(S-1)!`, `S = a+b+c+d`, and
/// `F(l) = l(a+c+l-1)(b+c+l-1)(a+d+l-1)(b+d+l-1)(S+l-2) /
/// ((S+2l-3)(S+2l-2)^2(S+2l-1))`.
pub fn fk_closed_form(a: u64, b: u64, c: u64, d: u64, n: u64) -> Result<Rational> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameters("need a, b >= 1".into()));
    }
    let s = a + b + c + d;
    let pre = fact(a + c - 1) * fact(b + c - 1) * fact(a + d - 1) * fact(b + d - 1) / fact(s - 1);
    let r = |v: u64| Rational::from(BigInt::from(v));
    let mut out = Rational::sign_power(n * (n + 1) / 2) * pre.pow(n as i64 + 1);
    for l in 1..=n {
        let num = r(l) * r(a + c + l - 1) * r(b + c + l - 1) * r(a + d + l - 1) * r(b + d + l - 1) * r(s + l - 2);
        let den = r(s + 2 * l - 3) * r(s + 2 * l - 2).pow(2) * r(s + 2 * l - 1);
        out = out * (num / den).pow((n + 1 - l) as i64);
    }
    Ok(out)
}
