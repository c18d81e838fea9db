//! Hankel matrices `(c_{i+j})_{0 <= i,j <= n}` and their exact determinants.

mod checkerboard;
pub mod det;
mod shift;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub use checkerboard::{checkerboard_split, CheckerboardSplit, Support};
pub use shift::{shift_factor_dn, shift_factor_matrix, shift_relation_check, ShiftCheck};

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, Term};
use crate::orthopoly;
use crate::sequences::SequenceSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Algorithm {
    RationalGauss,
    FractionFreeBareiss,
    CheckerboardSplit,
    RecurrenceProduct,
    Cofactor,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetResult {
    pub value: Term,
    pub algorithm: Algorithm,
    pub elimination_steps: u64,
}

/// The `(n+1) x (n+1)` Hankel matrix of `c_0, ..., c_{2n}`. Only the
/// moments are stored, so persymmetry holds by construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HankelMatrix {
    order: usize,
    moments: Vec<Term>,
}

impl HankelMatrix {
    /// From `c_0..=c_{2n}`; the length must be odd.
    pub fn from_moments(moments: Vec<Term>) -> Result<Self> {
        if moments.len().is_multiple_of(2) {
            return Err(Error::InvalidParameters(format!(
                "a Hankel matrix needs an odd number of moments, got {}",
                moments.len()
            )));
        }
        let poly = moments.iter().any(Term::is_poly);
        let moments = moments.into_iter().map(|t| if poly { Term::Poly(t.to_poly()) } else { t }).collect();
        Ok(HankelMatrix { order: 0, moments }.with_order())
    }

    fn with_order(mut self) -> Self {
        self.order = (self.moments.len() - 1) / 2;
        self
    }

    /// `n`; the matrix has `n + 1` rows.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.order + 1
    }

    pub fn moments(&self) -> &[Term] {
        &self.moments
    }

    pub fn entry(&self, i: usize, j: usize) -> &Term {
        &self.moments[i + j]
    }

    pub fn is_polynomial(&self) -> bool {
        self.moments.iter().any(Term::is_poly)
    }

    pub fn rows(&self) -> Vec<Vec<Term>> {
        (0..self.dim()).map(|i| (0..self.dim()).map(|j| self.entry(i, j).clone()).collect()).collect()
    }
}

impl fmt::Display for HankelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_matrix(f, &self.rows())
    }
}

/// Right-aligned columns.
pub fn write_matrix(f: &mut impl fmt::Write, rows: &[Vec<Term>]) -> fmt::Result {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let ncols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> =
        (0..ncols).map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        writeln!(f, "[ {} ]", line.join("  "))?;
    }
    Ok(())
}

pub fn hankel_matrix(spec: &SequenceSpec, n: usize) -> Result<HankelMatrix> {
    HankelMatrix::from_moments(spec.terms(2 * n as u64)?)
}

fn scalar_rows(rows: &[Vec<Term>]) -> Option<Vec<Vec<Rational>>> {
    rows.iter().map(|r| r.iter().map(|t| match t {
        Term::Scalar(c) => Some(c.clone()),
        Term::Poly(_) => None,
    }).collect()).collect()
}

/// Scales every entry by the lcm of all coefficient denominators so that
/// elimination runs on integer-coefficient polynomials.
fn integral_poly_rows(rows: &[Vec<Term>]) -> (Vec<Vec<Poly>>, Rational) {
    let mut l = BigInt::one();
    for t in rows.iter().flatten() {
        for c in t.to_poly().coeffs() {
            l = l.lcm(c.denom());
        }
    }
    let scale = Rational::from(l);
    let polys = rows.iter().map(|r| r.iter().map(|t| t.to_poly().scale(&scale)).collect()).collect();
    (polys, scale)
}

fn bareiss_terms(rows: &[Vec<Term>]) -> Result<(Term, u64)> {
    if let Some(s) = scalar_rows(rows) {
        let c = det::bareiss(s)?;
        return Ok((Term::Scalar(c.value), c.steps));
    }
    let (polys, scale) = integral_poly_rows(rows);
    let c = det::bareiss(polys)?;
    let inv = scale.pow(-(rows.len() as i64));
    Ok((Term::Poly(c.value.scale(&inv)), c.steps))
}

/// Determinant of a square matrix of terms.
pub fn det_matrix(rows: &[Vec<Term>], algorithm: Algorithm) -> Result<DetResult> {
    let (value, steps) = match algorithm {
        Algorithm::RationalGauss => {
            let s = scalar_rows(rows).ok_or(Error::UnsupportedAlgorithm("RationalGauss"))?;
            let c = det::gauss(s);
            (Term::Scalar(c.value), c.steps)
        }
        Algorithm::FractionFreeBareiss => bareiss_terms(rows)?,
        Algorithm::Cofactor => match scalar_rows(rows) {
            Some(s) => (Term::Scalar(det::cofactor(&s)), 0),
            None => {
                let p: Vec<Vec<Poly>> = rows.iter().map(|r| r.iter().map(Term::to_poly).collect()).collect();
                (Term::Poly(det::cofactor(&p)), 0)
            }
        },
        Algorithm::CheckerboardSplit => (checkerboard_split(rows)?.total, 0),
        Algorithm::RecurrenceProduct => {
            return Err(Error::UnsupportedAlgorithm("RecurrenceProduct needs a Hankel matrix"))
        }
    };
    Ok(DetResult { value, algorithm, elimination_steps: steps })
}

/// Determinant of a Hankel matrix with the chosen algorithm.
///
/// `RecurrenceProduct` extracts the three-term recurrence of the moments
/// and multiplies out `c_0^{n+1} prod t_l^{n+1-l}`; it fails with
/// `DegenerateMoments` if a leading minor vanishes.
pub fn det_exact(m: &HankelMatrix, algorithm: Algorithm) -> Result<DetResult> {
    if algorithm != Algorithm::RecurrenceProduct {
        return det_matrix(&m.rows(), algorithm);
    }
    let n = m.order();
    let moments: Vec<Rational> = m
        .moments()
        .iter()
        .map(Term::as_scalar)
        .collect::<Option<_>>()
        .ok_or(Error::UnsupportedAlgorithm("RecurrenceProduct"))?;
    let value = if n == 0 {
        Term::Scalar(moments[0].clone())
    } else {
        // H_n needs t_1..t_n, which depend on c_0..c_{2n} only
        let coeffs = orthopoly::recurrence_coeffs_t_only(&moments, n)?;
        orthopoly::hankel_from_recurrence(&Term::Scalar(moments[0].clone()), &coeffs, n)?
    };
    Ok(DetResult { value, algorithm, elimination_steps: 0 })
}

/// Gauss for scalar matrices, Bareiss for polynomial ones.
pub fn default_algorithm(m: &HankelMatrix) -> Algorithm {
    if m.is_polynomial() {
        Algorithm::FractionFreeBareiss
    } else {
        Algorithm::RationalGauss
    }
}

pub fn hankel_det(spec: &SequenceSpec, n: usize) -> Result<DetResult> {
    let m = hankel_matrix(spec, n)?;
    det_exact(&m, default_algorithm(&m))
}

/// `H_n` computed from explicit moments `c_0..=c_{2n}`.
pub fn hankel_det_of(moments: &[Term]) -> Result<Term> {
    let m = HankelMatrix::from_moments(moments.to_vec())?;
    Ok(det_exact(&m, default_algorithm(&m))?.value)
}
