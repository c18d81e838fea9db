//! `H_n(A_k'(x0)) = A_0'(x0)^{n+1} lim_{x -> x0} H_n(A_k(x)) / A_0(x)^{n+1}`
//! for polynomial families with a common root `A_k(x0) = 0`.

use crate::error::{Error, Result};
use crate::exact::{cancel_and_eval_limit, rat, Rational};
use crate::hankel::hankel_det_of;
use crate::sequences::{parse_spec, SequenceSpec};

/// Hankel determinant of the derivative sequence `A_k'(x0)` via the limit.
pub fn derivative_limit_hankel(family: &SequenceSpec, x0: &Rational, n: usize) -> Result<Rational> {
    let terms = family.terms(2 * n as u64)?;
    let polys: Vec<_> = terms.iter().map(|t| t.to_poly()).collect();
    if let Some(k) = polys.iter().position(|p| !p.eval(x0).is_zero()) {
        return Err(Error::CommonRootViolated { k });
    }
    let h = hankel_det_of(&terms)?.to_poly();
    let a0 = &polys[0];
    let lim = cancel_and_eval_limit(&h, &a0.pow(n as u32 + 1), x0)?;
    Ok(a0.derivative().eval(x0).pow(n as i64 + 1) * lim)
}

/// A polynomial family with a common root, and the scalar sequence whose
/// Hankel determinants equal `rescale(n) * H_n(A_k'(x0))`.
#[derive(Debug, Clone)]
pub struct DerivativeFamily {
    pub family: &'static str,
    pub x0: Rational,
    pub target: &'static str,
    /// `(c, e)` with `rescale(n) = c^{n+1} * 4^{e n(n+1)}`.
    pub rescale: (Rational, i64),
}

impl DerivativeFamily {
    pub fn rescale(&self, n: usize) -> Rational {
        let n = n as i64;
        self.rescale.0.pow(n + 1) * rat(4, 1).pow(self.rescale.1 * n * (n + 1))
    }

    pub fn family_spec(&self) -> SequenceSpec {
        parse_spec(self.family).expect("built-in family")
    }

    pub fn target_spec(&self) -> SequenceSpec {
        parse_spec(self.target).expect("built-in target")
    }

    /// `H_n` of the target sequence through the limit pipeline.
    pub fn hankel_via_limit(&self, n: usize) -> Result<Rational> {
        Ok(self.rescale(n) * derivative_limit_hankel(&self.family_spec(), &self.x0, n)?)
    }
}

/// The four families of the derivative method.
///
/// * `E_{2k+1}((1+x)/2)` at `0`: `A_k'(0) = (2k+1) E_{2k} / 2^{2k+1}`.
/// * `E_{2k+2}((1+x)/2)` at `1`: `A_k'(1) = (k+1) E_{2k+1}(1) = (2^{2k+2}-1) B_{2k+2}`.
/// * `B_{2k+1}((1+x)/2)` at `0`: `A_k'(0) = (2k+1) B_{2k}(1/2) / 2`.
/// * `B_{2k+3}((1+x)/2)` at `-1`: `A_k'(-1) = (2k+3) B_{2k+2} / 2`.
pub fn derivative_families() -> Vec<DerivativeFamily> {
    vec![
        DerivativeFamily {
            family: "E_{2k+1}((x+1)/2)",
            x0: rat(0, 1),
            target: "(2k+1)E_{2k}",
            rescale: (rat(2, 1), 1),
        },
        DerivativeFamily {
            family: "E_{2k+2}((x+1)/2)",
            x0: rat(1, 1),
            target: "(2^{2k+2}-1)B_{2k+2}",
            rescale: (rat(1, 1), 0),
        },
        DerivativeFamily {
            family: "B_{2k+1}((x+1)/2)",
            x0: rat(0, 1),
            target: "(2k+1)B_{2k}(1/2)",
            rescale: (rat(2, 1), 0),
        },
        DerivativeFamily {
            family: "B_{2k+3}((x+1)/2)",
            x0: rat(-1, 1),
            target: "(2k+3)B_{2k+2}",
            rescale: (rat(2, 1), 0),
        },
    ]
}

pub fn derivative_family(target: &str) -> Option<DerivativeFamily> {
    let key = crate::sequences::normalize(target);
    derivative_families().into_iter().find(|f| crate::sequences::normalize(f.target) == key)
}
