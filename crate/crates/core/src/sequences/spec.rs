use std::fmt;

use serde::{Deserialize, Serialize};

use super::character::{gen_bernoulli_poly, DirichletCharacter};
use super::numbers::{
    alt_power_sum, bernoulli_number, bernoulli_poly, euler_number, euler_poly, factorial,
    power_sum, tangent_number, zigzag_number,
};
use crate::closed_forms::umbral::fk_moment;
use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, Term};

/// Argument at which a polynomial family is taken: either the affine
/// expression `alpha*x + beta` in the free variable, or a rational point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arg {
    Symbolic { alpha: Rational, beta: Rational },
    Point(Rational),
}

impl Arg {
    pub fn x() -> Self {
        Arg::Symbolic { alpha: Rational::one(), beta: Rational::zero() }
    }

    pub fn affine(alpha: Rational, beta: Rational) -> Self {
        Arg::Symbolic { alpha, beta }
    }

    pub fn point(v: Rational) -> Self {
        Arg::Point(v)
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Arg::Symbolic { .. })
    }

    /// `p(arg)` as a term.
    pub fn apply(&self, p: &Poly) -> Term {
        match self {
            Arg::Symbolic { alpha, beta } => Term::Poly(p.affine_substitute(alpha, beta)),
            Arg::Point(v) => Term::Scalar(p.eval(v)),
        }
    }

    /// The argument `(arg + shift) / q`.
    pub fn shifted_scaled(&self, shift: &Rational, q: &Rational) -> Arg {
        match self {
            Arg::Symbolic { alpha, beta } => Arg::Symbolic { alpha: alpha / q, beta: (beta + shift) / q },
            Arg::Point(v) => Arg::Point((v + shift) / q),
        }
    }

    /// Replaces the free variable by the point `x`.
    pub fn at(&self, x: &Rational) -> Arg {
        match self {
            Arg::Symbolic { alpha, beta } => Arg::Point(alpha * x + beta),
            Arg::Point(_) => self.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, a: Term, b: Term) -> Term {
        match self {
            Sign::Plus => a + b,
            Sign::Minus => a - b,
        }
    }
}

/// The underlying number or polynomial family, indexed by `n >= 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    BernoulliNumber,
    EulerNumber,
    Bernoulli(Arg),
    Euler(Arg),
    /// `B_n((arg + r)/q) ± B_n((arg + s)/q)`
    BernDiffSum { q: u64, r: u64, s: u64, sign: Sign, arg: Arg },
    /// `E_n((arg + r)/q) ± E_n((arg + s)/q)`
    EulerDiffSum { q: u64, r: u64, s: u64, sign: Sign, arg: Arg },
    /// `B_{n,chi}(arg)`
    GenBernoulli { chi: DirichletCharacter, arg: Arg },
    PowerSum { s: u64 },
    AltPowerSum { s: u64 },
    Zigzag,
    /// Tangent number `T_n`, defined for `n >= 1`.
    Tangent,
    /// Umbral moment `B^{n+2} (B+1)_{a-1} (B+1)_{b-1} (-B+1)_{c-1} (-B+1)_{d-1}`.
    Umbral { a: u64, b: u64, c: u64, d: u64 },
    /// Termwise linear combination of other sequences.
    Linear(Vec<(Rational, SequenceSpec)>),
}

/// A factor depending on the inner index `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Multiplier {
    Const(Rational),
    /// `a*j + b`
    Linear { a: i64, b: i64 },
    /// `base^{a*j + b} - 1`
    PowMinusOne { base: u64, a: u64, b: u64 },
    /// `1 / (a*j + b)!`
    InvFactorial { a: u64, b: u64 },
    /// `base^j`
    Power(Rational),
    /// `1 / (a*j + b)`
    Reciprocal { a: u64, b: u64 },
}

impl Multiplier {
    fn value(&self, j: u64) -> Rational {
        match self {
            Multiplier::Const(c) => c.clone(),
            Multiplier::Linear { a, b } => Rational::from(*a * j as i64 + *b),
            Multiplier::PowMinusOne { base, a, b } => {
                Rational::from(*base).pow((a * j + b) as i64) - Rational::one()
            }
            Multiplier::InvFactorial { a, b } => {
                Rational::from(factorial(a * j + b)).recip().expect("factorial is positive")
            }
            Multiplier::Power(base) => base.pow(j as i64),
            Multiplier::Reciprocal { a, b } => {
                Rational::from(a * j + b).recip().unwrap_or_else(|_| Rational::zero())
            }
        }
    }
}

/// A named moment sequence `c_0, c_1, ...`.
///
/// The `k`-th term is resolved as follows: after skipping `shift` terms,
/// the first `prepend.len()` terms are the listed constants; beyond them the
/// inner index `j` maps to `base(index_scale*j + index_offset)`, multiplied
/// by every multiplier evaluated at `j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceSpec {
    pub name: String,
    pub base: Base,
    pub index_scale: u64,
    pub index_offset: u64,
    pub multipliers: Vec<Multiplier>,
    pub prepend: Vec<Rational>,
    pub shift: u64,
}

impl SequenceSpec {
    pub fn new(name: impl Into<String>, base: Base) -> Self {
        SequenceSpec {
            name: name.into(),
            base,
            index_scale: 1,
            index_offset: 0,
            multipliers: Vec::new(),
            prepend: Vec::new(),
            shift: 0,
        }
    }

    /// Index map `j -> a*j + b`; `a` must be at least 1.
    pub fn index(mut self, a: u64, b: u64) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParameters("index map needs a >= 1".into()));
        }
        self.index_scale = a;
        self.index_offset = b;
        Ok(self)
    }

    pub fn times(mut self, m: Multiplier) -> Self {
        self.multipliers.push(m);
        self
    }

    pub fn prepend(mut self, values: Vec<Rational>) -> Self {
        self.prepend = values;
        self
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The sequence `c_{k + by}`.
    pub fn shifted(&self, by: u64) -> Self {
        let mut s = self.clone();
        s.shift += by;
        s.name = if by == 0 {
            self.name.clone()
        } else {
            format!("shift{by}[{}]", self.name)
        };
        s
    }

    /// Whether terms are polynomials in `x`.
    pub fn is_polynomial(&self) -> bool {
        self.base.is_polynomial()
    }

    /// The same sequence with the free variable set to `x`.
    pub fn at(&self, x: &Rational) -> Self {
        let mut s = self.clone();
        s.base = self.base.at(x);
        s.name = format!("{}@x={x}", self.name);
        s
    }

    fn validate(&self) -> Result<()> {
        if self.index_scale == 0 {
            return Err(Error::InvalidParameters("index map needs a >= 1".into()));
        }
        self.base.validate()
    }

    /// The `k`-th term.
    pub fn resolve(&self, k: u64) -> Result<Term> {
        self.validate()?;
        let kk = k + self.shift;
        let poly = self.is_polynomial();
        let tag = |c: Rational| if poly { Term::Poly(Poly::constant(c)) } else { Term::Scalar(c) };
        let np = self.prepend.len() as u64;
        if kk < np {
            return Ok(tag(self.prepend[kk as usize].clone()));
        }
        let j = kk - np;
        let n = self.index_scale * j + self.index_offset;
        let factor: Rational = self.multipliers.iter().map(|m| m.value(j)).product();
        if factor.is_zero() {
            return Ok(tag(Rational::zero()));
        }
        Ok(self.base.term(n)?.scale(&factor))
    }

    /// Terms `c_0..=c_upto`.
    pub fn terms(&self, upto: u64) -> Result<Vec<Term>> {
        (0..=upto).map(|k| self.resolve(k)).collect()
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn check_diff_params(q: u64, r: u64, s: u64) -> Result<()> {
    if q == 0 || r >= s {
        return Err(Error::InvalidParameters(format!(
            "need q >= 1 and 0 <= r < s, got q={q}, r={r}, s={s}"
        )));
    }
    Ok(())
}

impl Base {
    pub fn is_polynomial(&self) -> bool {
        match self {
            Base::Bernoulli(a) | Base::Euler(a) => a.is_symbolic(),
            Base::BernDiffSum { arg, .. } | Base::EulerDiffSum { arg, .. } => arg.is_symbolic(),
            Base::GenBernoulli { arg, .. } => arg.is_symbolic(),
            Base::Linear(parts) => parts.iter().any(|(_, s)| s.is_polynomial()),
            _ => false,
        }
    }

    fn at(&self, x: &Rational) -> Base {
        match self {
            Base::Bernoulli(a) => Base::Bernoulli(a.at(x)),
            Base::Euler(a) => Base::Euler(a.at(x)),
            Base::BernDiffSum { q, r, s, sign, arg } => {
                Base::BernDiffSum { q: *q, r: *r, s: *s, sign: *sign, arg: arg.at(x) }
            }
            Base::EulerDiffSum { q, r, s, sign, arg } => {
                Base::EulerDiffSum { q: *q, r: *r, s: *s, sign: *sign, arg: arg.at(x) }
            }
            Base::GenBernoulli { chi, arg } => Base::GenBernoulli { chi: chi.clone(), arg: arg.at(x) },
            Base::Linear(parts) => Base::Linear(parts.iter().map(|(c, s)| (c.clone(), s.at(x))).collect()),
            other => other.clone(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Base::BernDiffSum { q, r, s, .. } | Base::EulerDiffSum { q, r, s, .. } => {
                check_diff_params(*q, *r, *s)
            }
            Base::PowerSum { s } | Base::AltPowerSum { s } if *s == 0 => {
                Err(Error::InvalidParameters("power sums need s >= 1".into()))
            }
            Base::Umbral { a, b, .. } if *a == 0 || *b == 0 => {
                Err(Error::InvalidParameters("umbral moments need a, b >= 1".into()))
            }
            _ => Ok(()),
        }
    }

    /// Term `n` of the base family.
    pub fn term(&self, n: u64) -> Result<Term> {
        let nu = n as usize;
        Ok(match self {
            Base::BernoulliNumber => Term::Scalar(bernoulli_number(nu)),
            Base::EulerNumber => Term::Scalar(euler_number(nu)),
            Base::Bernoulli(arg) => arg.apply(&bernoulli_poly(nu)),
            Base::Euler(arg) => arg.apply(&euler_poly(nu)),
            Base::BernDiffSum { q, r, s, sign, arg } => {
                check_diff_params(*q, *r, *s)?;
                let p = bernoulli_poly(nu);
                let q = Rational::from(*q);
                let first = arg.shifted_scaled(&Rational::from(*r), &q).apply(&p);
                let second = arg.shifted_scaled(&Rational::from(*s), &q).apply(&p);
                sign.apply(first, second)
            }
            Base::EulerDiffSum { q, r, s, sign, arg } => {
                check_diff_params(*q, *r, *s)?;
                let p = euler_poly(nu);
                let q = Rational::from(*q);
                let first = arg.shifted_scaled(&Rational::from(*r), &q).apply(&p);
                let second = arg.shifted_scaled(&Rational::from(*s), &q).apply(&p);
                sign.apply(first, second)
            }
            Base::GenBernoulli { chi, arg } => arg.apply(&gen_bernoulli_poly(nu, chi)),
            Base::PowerSum { s } => Term::Scalar(power_sum(*s, nu)),
            Base::AltPowerSum { s } => Term::Scalar(alt_power_sum(*s, nu)),
            Base::Zigzag => Term::Scalar(zigzag_number(nu)),
            Base::Tangent => {
                if n == 0 {
                    return Err(Error::InvalidParameters("tangent numbers start at index 1".into()));
                }
                Term::Scalar(tangent_number(nu))
            }
            Base::Umbral { a, b, c, d } => Term::Scalar(fk_moment(*a, *b, *c, *d, n)?),
            Base::Linear(parts) => {
                let poly = self.is_polynomial();
                let mut acc = if poly { Term::Poly(Poly::zero()) } else { Term::Scalar(Rational::zero()) };
                for (c, s) in parts {
                    acc = acc + s.resolve(n)?.scale(c);
                }
                acc
            }
        })
    }
}

/// Term `k` of `b_k^±(q,r,s;x) = B_k((x+r)/q) ± B_k((x+s)/q)`.
pub fn bern_diff_sum(q: u64, r: u64, s: u64, sign: Sign, k: u64) -> Result<Poly> {
    let base = Base::BernDiffSum { q, r, s, sign, arg: Arg::x() };
    Ok(base.term(k)?.to_poly())
}

/// Term `k` of `e_k^±(q,r,s;x) = E_k((x+r)/q) ± E_k((x+s)/q)`.
pub fn euler_diff_sum(q: u64, r: u64, s: u64, sign: Sign, k: u64) -> Result<Poly> {
    let base = Base::EulerDiffSum { q, r, s, sign, arg: Arg::x() };
    Ok(base.term(k)?.to_poly())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn diff_sum_examples() {
        for (q, r, s) in [(1, 0, 1), (2, 0, 1), (3, 1, 2), (6, 1, 5)] {
            assert!(bern_diff_sum(q, r, s, Sign::Minus, 0).unwrap().is_zero());
            assert_eq!(euler_diff_sum(q, r, s, Sign::Plus, 0).unwrap(), Poly::constant(rat(2, 1)));
        }
        assert_eq!(bern_diff_sum(2, 0, 1, Sign::Minus, 1).unwrap(), Poly::constant(rat(-1, 2)));
        assert!(bern_diff_sum(2, 1, 1, Sign::Minus, 1).is_err());
        assert!(euler_diff_sum(0, 0, 1, Sign::Plus, 1).is_err());
    }

    #[test]
    fn prepend_and_multiplier() {
        // k E_{k-1}
        let s = SequenceSpec::new("kE_{k-1}", Base::EulerNumber)
            .prepend(vec![Rational::zero()])
            .times(Multiplier::Linear { a: 1, b: 1 });
        let t: Vec<String> = s.terms(6).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(t, ["0", "1", "0", "-3", "0", "25", "0"]);
        let shifted = s.shifted(1);
        assert_eq!(shifted.resolve(0).unwrap(), Term::Scalar(rat(1, 1)));
        assert_eq!(shifted.resolve(2).unwrap(), Term::Scalar(rat(-3, 1)));
    }

    #[test]
    fn tags_are_uniform() {
        let s = SequenceSpec::new("kE_{k-1}(x)", Base::Euler(Arg::x()))
            .prepend(vec![Rational::zero()])
            .times(Multiplier::Linear { a: 1, b: 1 });
        assert!(s.terms(5).unwrap().iter().all(Term::is_poly));
    }

    #[test]
    fn tangent_needs_positive_index() {
        let s = SequenceSpec::new("T", Base::Tangent);
        assert!(s.resolve(0).is_err());
        let s = s.index(1, 1).unwrap();
        assert_eq!(s.resolve(2).unwrap(), Term::Scalar(rat(16, 1)));
        assert!(SequenceSpec::new("T", Base::Tangent).index(0, 1).is_err());
    }
}
