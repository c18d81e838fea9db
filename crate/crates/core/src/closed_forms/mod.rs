//! Closed-form evaluations of Hankel determinants.
//!
//! Most entries use one of two product shapes:
//!
//! * all `n`: `H_n = (-1)^{eps(n)} a^{n+1} prod_{l=1}^{n} b(l)^{n+1-l}`
//! * odd only: `H_{2m} = 0` and
//!   `H_{2m+1} = (-1)^{m+1} a^{2(m+1)} prod_{l=1}^{m} b(l)^{2(m+1-l)}`,
//!   where `a` may depend on `m`
//!
//! Everything else carries its own evaluator. Closed forms never compute a
//! determinant.

pub mod misc;
mod registry;
pub mod umbral;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use registry::{identity, registry};

use crate::error::{Error, Result};
use crate::exact::{Rational, Term};
use crate::sequences::SequenceSpec;

/// Largest index any evaluator accepts.
pub const MAX_INDEX: usize = 200;

pub type Evaluator = Arc<dyn Fn(u64) -> Term + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Format {
    AllN,
    OddOnly,
    Custom,
}

/// `eps(n)` in `(-1)^{eps(n)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignPattern {
    Zero,
    NPlus1,
    /// `C(n+1, 2)`
    BinomN1,
    /// `C(n+2, 2)`
    BinomN2,
    /// `m + 1` for `n = 2m + 1`
    MPlus1,
    Custom,
}

impl SignPattern {
    pub fn exponent(self, n: u64) -> u64 {
        match self {
            SignPattern::Zero | SignPattern::Custom => 0,
            SignPattern::NPlus1 => n + 1,
            SignPattern::BinomN1 => n * (n + 1) / 2,
            SignPattern::BinomN2 => (n + 1) * (n + 2) / 2,
            SignPattern::MPlus1 => n / 2 + 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SignPattern::Zero => "0",
            SignPattern::NPlus1 => "n+1",
            SignPattern::BinomN1 => "C(n+1,2)",
            SignPattern::BinomN2 => "C(n+2,2)",
            SignPattern::MPlus1 => "m+1",
            SignPattern::Custom => "custom",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Asserted,
    /// Agreement is reported index by index but never fails a run.
    ReportOnly,
}

/// Claimed zeros: `H_{2m} = 0` for `m >= even_from`, `H_{2m+1} = 0` for
/// `m >= odd_from`. With `nonzero_otherwise`, every other index is
/// claimed nonzero.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vanishing {
    pub even_from: Option<u64>,
    pub odd_from: Option<u64>,
    pub nonzero_otherwise: bool,
}

impl Vanishing {
    pub fn none() -> Self {
        Vanishing { even_from: None, odd_from: None, nonzero_otherwise: true }
    }

    pub fn odd_only() -> Self {
        Vanishing { even_from: Some(0), odd_from: None, nonzero_otherwise: true }
    }

    /// The claim at index `n`: `Some(true)` for zero, `Some(false)` for
    /// nonzero, `None` for no claim.
    pub fn claim(&self, n: u64) -> Option<bool> {
        let m = n / 2;
        let from = if n.is_multiple_of(2) { self.even_from } else { self.odd_from };
        match from {
            Some(f) if m >= f => Some(true),
            _ if self.nonzero_otherwise => Some(false),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Group {
    /// Nonzero for all `n`, in the all-`n` product shape.
    TableAllN,
    /// Zero at even `n`, in the odd-only product shape.
    TableOddOnly,
    Theorem,
    Character,
    PowerSum,
    Derivative,
    Misc,
    Umbral,
}

/// Display cells of a table row: `eps(n)`, `a`, `b(l)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cells {
    pub eps: String,
    pub a: String,
    pub b: String,
}

#[derive(Clone)]
pub struct ClosedFormIdentity {
    pub id: String,
    pub sequence: SequenceSpec,
    pub format: Format,
    pub sign: SignPattern,
    pub formula: String,
    pub citation: String,
    pub status: Status,
    pub vanishing: Vanishing,
    pub group: Group,
    pub default_max: usize,
    pub cells: Option<Cells>,
    pub params: Vec<(String, String)>,
    prefactor: Option<Evaluator>,
    factor: Option<Evaluator>,
    custom: Option<Evaluator>,
}

impl fmt::Debug for ClosedFormIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClosedFormIdentity")
            .field("id", &self.id)
            .field("sequence", &self.sequence.name)
            .field("format", &self.format)
            .field("status", &self.status)
            .finish()
    }
}

/// Serializable description of an identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityInfo {
    pub id: String,
    pub sequence: String,
    pub format: Format,
    pub sign: SignPattern,
    pub formula: String,
    pub citation: String,
    pub status: Status,
    pub vanishing: Vanishing,
    pub group: Group,
    pub default_max: usize,
    pub params: Vec<(String, String)>,
}

impl ClosedFormIdentity {
    /// All-`n` product with `a` possibly depending on `n`.
    pub fn all_n(
        id: impl Into<String>,
        sequence: SequenceSpec,
        sign: SignPattern,
        a: impl Fn(u64) -> Term + Send + Sync + 'static,
        b: impl Fn(u64) -> Term + Send + Sync + 'static,
    ) -> Self {
        Self::base(id, sequence, Format::AllN, sign, Some(Arc::new(a)), Some(Arc::new(b)), None)
    }

    /// Odd-only product with `a` depending on `m`.
    pub fn odd_only(
        id: impl Into<String>,
        sequence: SequenceSpec,
        a: impl Fn(u64) -> Term + Send + Sync + 'static,
        b: impl Fn(u64) -> Term + Send + Sync + 'static,
    ) -> Self {
        let mut s =
            Self::base(id, sequence, Format::OddOnly, SignPattern::MPlus1, Some(Arc::new(a)), Some(Arc::new(b)), None);
        s.vanishing = Vanishing::odd_only();
        s
    }

    pub fn custom(
        id: impl Into<String>,
        sequence: SequenceSpec,
        eval: impl Fn(u64) -> Term + Send + Sync + 'static,
    ) -> Self {
        Self::base(id, sequence, Format::Custom, SignPattern::Custom, None, None, Some(Arc::new(eval)))
    }

    fn base(
        id: impl Into<String>,
        sequence: SequenceSpec,
        format: Format,
        sign: SignPattern,
        prefactor: Option<Evaluator>,
        factor: Option<Evaluator>,
        custom: Option<Evaluator>,
    ) -> Self {
        let default_max = match (format, sequence.is_polynomial()) {
            (_, true) => 5,
            (Format::OddOnly, false) => 9,
            _ => 8,
        };
        ClosedFormIdentity {
            id: id.into(),
            sequence,
            format,
            sign,
            formula: String::new(),
            citation: String::new(),
            status: Status::Asserted,
            vanishing: Vanishing::none(),
            group: Group::Theorem,
            default_max,
            cells: None,
            params: Vec::new(),
            prefactor,
            factor,
            custom,
        }
    }

    pub fn formula(mut self, f: impl Into<String>) -> Self {
        self.formula = f.into();
        self
    }

    pub fn cite(mut self, c: impl Into<String>) -> Self {
        self.citation = c.into();
        self
    }

    pub fn group(mut self, g: Group) -> Self {
        self.group = g;
        self
    }

    pub fn status(mut self, s: Status) -> Self {
        self.status = s;
        self
    }

    pub fn vanishing(mut self, v: Vanishing) -> Self {
        self.vanishing = v;
        self
    }

    pub fn max(mut self, n: usize) -> Self {
        self.default_max = n;
        self
    }

    pub fn cells(mut self, eps: &str, a: &str, b: &str) -> Self {
        self.cells = Some(Cells { eps: eps.into(), a: a.into(), b: b.into() });
        self
    }

    pub fn param(mut self, k: &str, v: impl ToString) -> Self {
        self.params.push((k.to_string(), v.to_string()));
        self
    }

    pub fn info(&self) -> IdentityInfo {
        IdentityInfo {
            id: self.id.clone(),
            sequence: self.sequence.name.clone(),
            format: self.format,
            sign: self.sign,
            formula: self.formula.clone(),
            citation: self.citation.clone(),
            status: self.status,
            vanishing: self.vanishing,
            group: self.group,
            default_max: self.default_max,
            params: self.params.clone(),
        }
    }

    fn zero(&self) -> Term {
        if self.sequence.is_polynomial() {
            Term::Poly(crate::exact::Poly::zero())
        } else {
            Term::Scalar(Rational::zero())
        }
    }

    /// The closed-form value at index `n`.
    pub fn eval(&self, n: usize) -> Result<Term> {
        if n > MAX_INDEX {
            return Err(Error::OutOfRange { id: self.id.clone(), index: n });
        }
        let n = n as u64;
        let v = match self.format {
            Format::Custom => (self.custom.as_ref().expect("custom evaluator"))(n),
            Format::AllN => {
                let a = self.prefactor.as_ref().expect("prefactor");
                let b = self.factor.as_ref().expect("factor");
                let mut acc = a(n).pow(n as u32 + 1).scale(&Rational::sign_power(self.sign.exponent(n)));
                for l in 1..=n {
                    acc = acc * b(l).pow((n + 1 - l) as u32);
                }
                acc
            }
            Format::OddOnly => {
                if n.is_multiple_of(2) {
                    return Ok(self.zero());
                }
                let m = n / 2;
                let a = self.prefactor.as_ref().expect("prefactor");
                let b = self.factor.as_ref().expect("factor");
                let mut acc = a(m).pow(2 * (m as u32 + 1)).scale(&Rational::sign_power(m + 1));
                for l in 1..=m {
                    acc = acc * b(l).pow(2 * (m + 1 - l) as u32);
                }
                acc
            }
        };
        Ok(v)
    }
}

/// Evaluates identity `id` at index `n`.
pub fn eval_closed_form(id: &str, n: usize) -> Result<Term> {
    identity(id)?.eval(n)
}
