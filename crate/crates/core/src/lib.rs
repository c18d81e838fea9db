//! Exact Hankel determinants of Bernoulli and Euler number and polynomial
//! sequences.
//!
//! * [`exact`]: rationals, polynomials over them, and the [`exact::Term`]
//!   union the rest of the crate computes with.
//! * [`sequences`]: generators and named sequence specifications.
//! * [`hankel`]: Hankel matrices and determinant engines.
//! * [`orthopoly`]: three-term recurrences from moments and the
//!   derivative-sequence limit method.
//! * [`closed_forms`]: the registry of closed-form determinant evaluations.
//! * [`verify`]: brute-force checking of the registry.
//! * [`cli`]: the `hankel` command line front end.

pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod exact;
pub mod hankel;
pub mod orthopoly;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{rat, Poly, Rational, Term};
pub use sequences::{parse_spec, SequenceSpec};
