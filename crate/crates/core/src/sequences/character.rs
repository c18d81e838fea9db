use serde::{Deserialize, Serialize};

use num_integer::Integer;

use super::numbers::bernoulli_poly;
use crate::error::{Error, Result};
use crate::exact::{Poly, Rational};

/// A real Dirichlet character given by its value table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirichletCharacter {
    modulus: u64,
    /// `values[a - 1] = chi(a)` for `a = 1..=modulus`.
    values: Vec<i8>,
    label: String,
}

impl DirichletCharacter {
    /// Builds a character from `chi(1), ..., chi(modulus)`, checking that it
    /// vanishes off the units and is completely multiplicative on them.
    pub fn new(label: impl Into<String>, modulus: u64, values: Vec<i8>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        if modulus == 0 || values.len() as u64 != modulus {
            return bad(format!("character table needs {modulus} values"));
        }
        if values.iter().any(|v| !(-1..=1).contains(v)) {
            return bad("character values must lie in {-1, 0, 1}".into());
        }
        let chi = DirichletCharacter { modulus, values, label: label.into() };
        for a in 1..=modulus {
            let unit = a.gcd(&modulus) == 1;
            if unit == (chi.value(a) == 0) {
                return bad(format!("chi({a}) must be {}", if unit { "nonzero" } else { "zero" }));
            }
        }
        for a in (1..=modulus).filter(|a| a.gcd(&modulus) == 1) {
            for b in (1..=modulus).filter(|b| b.gcd(&modulus) == 1) {
                if chi.value(a * b) != chi.value(a) * chi.value(b) {
                    return bad(format!("not multiplicative at ({a}, {b})"));
                }
            }
        }
        Ok(chi)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `chi(a)` for any nonnegative `a`, by periodicity.
    pub fn value(&self, a: u64) -> i8 {
        let r = a % self.modulus;
        let idx = if r == 0 { self.modulus } else { r };
        self.values[idx as usize - 1]
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// Smallest `d | modulus` such that `chi` is constant on unit classes
    /// mod `d`.
    pub fn conductor(&self) -> u64 {
        let m = self.modulus;
        let units: Vec<u64> = (1..=m).filter(|a| a.gcd(&m) == 1).collect();
        (1..=m)
            .filter(|d| m.is_multiple_of(*d))
            .find(|&d| {
                units.iter().all(|&a| {
                    units.iter().all(|&b| a % d != b % d || self.value(a) == self.value(b))
                })
            })
            .unwrap_or(m)
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus
    }

    /// Trivial character (modulus 1).
    pub fn principal() -> Self {
        DirichletCharacter { modulus: 1, values: vec![1], label: "chi0".into() }
    }

    /// The built-in real characters: conductors 3, 4, 6 with two nonzero
    /// values, and four characters modulo 8 and 12.
    pub fn builtin(label: &str) -> Option<Self> {
        let (m, v): (u64, &[i8]) = match label {
            "chi0" => return Some(Self::principal()),
            "chi3" => (3, &[1, -1, 0]),
            "chi4" => (4, &[1, 0, -1, 0]),
            "chi6" => (6, &[1, 0, 0, 0, -1, 0]),
            "chi8_1" => (8, &[1, 0, -1, 0, -1, 0, 1, 0]),
            "chi8_2" => (8, &[1, 0, 1, 0, -1, 0, -1, 0]),
            "chi12_1" => (12, &[1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1, 0]),
            "chi12_2" => (12, &[1, 0, 0, 0, 1, 0, -1, 0, 0, 0, -1, 0]),
            _ => return None,
        };
        Some(Self::new(label, m, v.to_vec()).expect("built-in table is a character"))
    }

    pub fn builtin_labels() -> &'static [&'static str] {
        &["chi0", "chi3", "chi4", "chi6", "chi8_1", "chi8_2", "chi12_1", "chi12_2"]
    }

    /// The conductor-`q` character for `q` in {3, 4, 6}.
    pub fn two_valued(q: u64) -> Option<Self> {
        match q {
            3 => Self::builtin("chi3"),
            4 => Self::builtin("chi4"),
            6 => Self::builtin("chi6"),
            _ => None,
        }
    }
}

/// `B_{n,chi}(x) = q^{n-1} sum_{a=1}^{q} chi(a) B_n((a + x)/q)`, `q` the
/// modulus of the table.
pub fn gen_bernoulli_poly(n: usize, chi: &DirichletCharacter) -> Poly {
    let q = Rational::from(chi.modulus());
    let inv_q = q.recip().expect("modulus is positive");
    let bn = bernoulli_poly(n);
    let sum = (1..=chi.modulus())
        .filter(|&a| chi.value(a) != 0)
        .fold(Poly::zero(), |acc, a| {
            let shifted = bn.affine_substitute(&inv_q, &(Rational::from(a) * &inv_q));
            acc + shifted.scale(&Rational::from(chi.value(a) as i64))
        });
    sum.scale(&q.pow(n as i64 - 1))
}

/// `B_{n,chi} = B_{n,chi}(0)`.
pub fn gen_bernoulli_number(n: usize, chi: &DirichletCharacter) -> Rational {
    gen_bernoulli_poly(n, chi).eval(&Rational::zero())
}
