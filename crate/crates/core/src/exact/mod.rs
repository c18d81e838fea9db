//! Exact scalars and polynomials.
//!
//! Everything above this module works over [`Rational`] or over the ring
//! [`Poly`] of polynomials in one indeterminate `x` with rational
//! coefficients. There is no floating point anywhere in the crate.

mod poly;
mod rational;
mod term;

use std::fmt::Debug;

pub use poly::{cancel_and_eval_limit, Poly};
pub use rational::{rat, Rational};
pub use term::Term;

use crate::error::{Error, Result};

/// An integral domain with exact division, enough for fraction-free
/// elimination.
pub trait Domain: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self / den`, which the caller asserts to be exact.
    fn div_exact(&self, den: &Self) -> Result<Self>;
}

macro_rules! ring_ops {
    () => {
        fn plus(&self, rhs: &Self) -> Self {
            self + rhs
        }
        fn minus(&self, rhs: &Self) -> Self {
            self - rhs
        }
        fn times(&self, rhs: &Self) -> Self {
            self * rhs
        }
        fn negated(&self) -> Self {
            -self
        }
    };
}
pub(crate) use ring_ops;

impl Domain for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    ring_ops!();
    fn div_exact(&self, den: &Self) -> Result<Self> {
        self.checked_div(den)
    }
}

impl Domain for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    ring_ops!();
    fn div_exact(&self, den: &Self) -> Result<Self> {
        Poly::div_exact(self, den).map_err(|e| match e {
            Error::NotDivisible => Error::InternalInexactDivision,
            other => other,
        })
    }
}
