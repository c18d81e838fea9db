use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Domain, Poly, Rational};
use crate::error::{Error, Result};

/// A sequence entry or determinant value: either an exact rational or a
/// polynomial in `x`.
///
/// Arithmetic promotes to `Poly` whenever one operand is a polynomial.
/// Equality compares values, so `Scalar(c) == Poly(c)`.
#[derive(Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Term {
    Scalar(Rational),
    Poly(Poly),
}

impl Term {
    pub fn is_poly(&self) -> bool {
        matches!(self, Term::Poly(_))
    }

    pub fn to_poly(&self) -> Poly {
        match self {
            Term::Scalar(c) => Poly::constant(c.clone()),
            Term::Poly(p) => p.clone(),
        }
    }

    /// The rational value, if this term does not depend on `x`.
    pub fn as_scalar(&self) -> Option<Rational> {
        match self {
            Term::Scalar(c) => Some(c.clone()),
            Term::Poly(p) => p.as_constant(),
        }
    }

    pub fn eval_at(&self, x: &Rational) -> Rational {
        match self {
            Term::Scalar(c) => c.clone(),
            Term::Poly(p) => p.eval(x),
        }
    }

    /// Same tag as `self`, value `c`.
    pub fn like(&self, c: Rational) -> Term {
        match self {
            Term::Scalar(_) => Term::Scalar(c),
            Term::Poly(_) => Term::Poly(Poly::constant(c)),
        }
    }

    pub fn pow(&self, e: u32) -> Term {
        match self {
            Term::Scalar(c) => Term::Scalar(c.pow(e as i64)),
            Term::Poly(p) => Term::Poly(p.pow(e)),
        }
    }

    pub fn scale(&self, c: &Rational) -> Term {
        match self {
            Term::Scalar(a) => Term::Scalar(a * c),
            Term::Poly(p) => Term::Poly(p.scale(c)),
        }
    }

    /// Exact quotient in the polynomial ring (or the rationals).
    pub fn div_exact(&self, den: &Term) -> Result<Term> {
        match (self, den) {
            (Term::Scalar(a), Term::Scalar(b)) => Ok(Term::Scalar(a.checked_div(b)?)),
            _ => Ok(Term::Poly(self.to_poly().div_exact(&den.to_poly())?)),
        }
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Term::Scalar(a), Term::Scalar(b)) => a == b,
            (Term::Poly(a), Term::Poly(b)) => a == b,
            (Term::Scalar(a), Term::Poly(p)) | (Term::Poly(p), Term::Scalar(a)) => {
                p.as_constant().as_ref() == Some(a)
            }
        }
    }
}

impl Eq for Term {}

impl From<Rational> for Term {
    fn from(c: Rational) -> Self {
        Term::Scalar(c)
    }
}

impl From<Poly> for Term {
    fn from(p: Poly) -> Self {
        Term::Poly(p)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Scalar(c) => write!(f, "{c}"),
            Term::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Scalar(c) => write!(f, "Scalar({c})"),
            Term::Poly(p) => write!(f, "Poly({p})"),
        }
    }
}

macro_rules! term_op {
    ($tr:ident, $m:ident) => {
        impl $tr<&Term> for &Term {
            type Output = Term;
            fn $m(self, rhs: &Term) -> Term {
                match (self, rhs) {
                    (Term::Scalar(a), Term::Scalar(b)) => Term::Scalar(a.$m(b)),
                    _ => Term::Poly((&self.to_poly()).$m(&rhs.to_poly())),
                }
            }
        }
        impl $tr<Term> for Term {
            type Output = Term;
            fn $m(self, rhs: Term) -> Term {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Term> for Term {
            type Output = Term;
            fn $m(self, rhs: &Term) -> Term {
                (&self).$m(rhs)
            }
        }
    };
}
term_op!(Add, add);
term_op!(Sub, sub);
term_op!(Mul, mul);

impl Neg for &Term {
    type Output = Term;
    fn neg(self) -> Term {
        match self {
            Term::Scalar(a) => Term::Scalar(-a),
            Term::Poly(p) => Term::Poly(-p),
        }
    }
}

impl Neg for Term {
    type Output = Term;
    fn neg(self) -> Term {
        -&self
    }
}

impl Domain for Term {
    fn zero() -> Self {
        Term::Scalar(Rational::zero())
    }
    fn one() -> Self {
        Term::Scalar(Rational::one())
    }
    fn is_zero(&self) -> bool {
        match self {
            Term::Scalar(c) => c.is_zero(),
            Term::Poly(p) => p.is_zero(),
        }
    }
    super::ring_ops!();
    fn div_exact(&self, den: &Self) -> Result<Self> {
        Term::div_exact(self, den).map_err(|e| match e {
            Error::NotDivisible => Error::InternalInexactDivision,
            other => other,
        })
    }
}
