use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals, coefficients in
/// ascending powers. No trailing zero coefficients are ever stored, so the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `c * x^d`
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Poly::new(coeffs)
    }

    /// `alpha * x + beta`
    pub fn linear(alpha: Rational, beta: Rational) -> Self {
        Poly::new(vec![beta, alpha])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// `q(x) = p(alpha*x + beta)`.
    pub fn affine_substitute(&self, alpha: &Rational, beta: &Rational) -> Poly {
        let lin = Poly::linear(alpha.clone(), beta.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &lin) + &Poly::constant(c.clone()))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Euclidean division; `den` must be nonzero.
    pub fn div_rem(&self, den: &Poly) -> Result<(Poly, Poly)> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = den.coeffs[dd].recip()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in den.coeffs.iter().enumerate() {
                    rem[i + j] -= &(&c * dc);
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient `num / den`; fails with `NotDivisible` when the
    /// remainder is nonzero.
    pub fn div_exact(&self, den: &Poly) -> Result<Poly> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = den.as_constant() {
            return Ok(self.scale(&c.recip()?));
        }
        let (q, r) = self.div_rem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Divides out `(x - x0)` as often as possible, returning the cofactor
    /// and the multiplicity. The zero polynomial has infinite order and is
    /// returned unchanged with `usize::MAX`.
    pub fn strip_root(&self, x0: &Rational) -> (Poly, usize) {
        if self.is_zero() {
            return (Poly::zero(), usize::MAX);
        }
        let factor = Poly::linear(Rational::one(), -x0);
        let mut p = self.clone();
        let mut m = 0;
        while p.eval(x0).is_zero() {
            p = p.div_exact(&factor).expect("root implies exact division");
            m += 1;
        }
        (p, m)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

/// `lim_{x -> x0} num(x)/den(x)` by cancelling common factors `(x - x0)`.
pub fn cancel_and_eval_limit(num: &Poly, den: &Poly, x0: &Rational) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (den_rest, den_order) = den.strip_root(x0);
    if num.is_zero() {
        return Ok(Rational::zero());
    }
    let (num_rest, num_order) = num.strip_root(x0);
    if num_order < den_order {
        return Err(Error::PoleAtLimit(x0.to_string()));
    }
    if num_order > den_order {
        return Ok(Rational::zero());
    }
    Ok(num_rest.eval(x0) / den_rest.eval(x0))
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, Rational::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Poly::new(coeffs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Poly::new(Vec::<Rational>::deserialize(deserializer)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(c: &[(i64, i64)]) -> Poly {
        Poly::new(c.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    #[test]
    fn eval_examples() {
        // x^2 - x at 1/2
        assert_eq!(Poly::from_ints(&[0, -1, 1]).eval(&rat(1, 2)), rat(-1, 4));
        assert_eq!(Poly::one().eval(&rat(7, 1)), Rational::one());
        assert_eq!(p(&[(-1, 2), (1, 1)]).eval(&rat(1, 2)), Rational::zero());
    }

    #[test]
    fn affine_substitute_examples() {
        let half = rat(1, 2);
        assert_eq!(Poly::x().affine_substitute(&half, &half), p(&[(1, 2), (1, 2)]));
        // B_3((x+1)/2) = x(x^2-1)/8
        let b3 = p(&[(0, 1), (1, 2), (-3, 2), (1, 1)]);
        assert_eq!(b3.affine_substitute(&half, &half), p(&[(0, 1), (-1, 8), (0, 1), (1, 8)]));
        let c = Poly::constant(rat(5, 3));
        assert_eq!(c.affine_substitute(&rat(9, 1), &rat(-4, 7)), c);
    }

    #[test]
    fn derivative_examples() {
        let b2 = p(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(b2.derivative(), Poly::from_ints(&[-1, 2]));
        assert!(Poly::constant(rat(3, 1)).derivative().is_zero());
        let e4 = Poly::from_ints(&[0, 1, 0, -2, 1]);
        assert_eq!(e4.derivative(), Poly::from_ints(&[1, 0, -6, 4]));
    }

    #[test]
    fn exact_division() {
        let x2m1 = Poly::from_ints(&[-1, 0, 1]);
        assert_eq!(x2m1.div_exact(&Poly::from_ints(&[-1, 1])).unwrap(), Poly::from_ints(&[1, 1]));
        assert_eq!(Poly::zero().div_exact(&Poly::x()).unwrap(), Poly::zero());
        let x3mx = Poly::from_ints(&[0, -1, 0, 1]);
        assert_eq!(x3mx.div_exact(&x2m1).unwrap(), Poly::x());
        assert_eq!(Poly::x().div_exact(&x2m1), Err(Error::NotDivisible));
        assert_eq!(Poly::x().div_exact(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn limits() {
        let x2m1 = Poly::from_ints(&[-1, 0, 1]);
        let one = Rational::one();
        assert_eq!(cancel_and_eval_limit(&x2m1, &Poly::from_ints(&[-1, 1]), &one).unwrap(), rat(2, 1));
        let x3 = Poly::monomial(one.clone(), 3);
        assert_eq!(cancel_and_eval_limit(&x3, &Poly::x(), &Rational::zero()).unwrap(), Rational::zero());
        assert_eq!(
            cancel_and_eval_limit(&x2m1.scale(&rat(3, 1)), &x2m1, &rat(-1, 1)).unwrap(),
            rat(3, 1)
        );
        assert!(matches!(
            cancel_and_eval_limit(&Poly::x(), &x3, &Rational::zero()),
            Err(Error::PoleAtLimit(_))
        ));
    }

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::new(vec![rat(1, 1), rat(0, 1)]).degree(), Some(0));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(0, 1), (-1, 8), (0, 1), (1, 8)]).to_string(), "1/8*x^3 - 1/8*x");
        assert_eq!(Poly::from_ints(&[-1, 0, 1]).to_string(), "x^2 - 1");
    }
}
