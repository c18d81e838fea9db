//! Brute-force checking of the closed-form registry.
//!
//! The oracle side is always a determinant from [`crate::hankel`]; the
//! other side is always the registry evaluator. Values are kept as exact
//! strings so a report can be re-audited without this crate.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{identity, registry, ClosedFormIdentity, Status};
use crate::error::{Error, Result};
use crate::exact::{Rational, Term};
use crate::hankel::hankel_det;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRecord {
    pub index: usize,
    pub oracle: String,
    pub closed_form: String,
    #[serde(rename = "match")]
    pub matches: bool,
    /// Claimed vanishing at this index: `Some(true)` zero, `Some(false)` nonzero.
    pub claim: Option<bool>,
    pub claim_holds: bool,
    pub elapsed_us: u64,
}

impl IndexRecord {
    pub fn ok(&self) -> bool {
        self.matches && self.claim_holds
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub min_index: usize,
    pub max_index: usize,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    /// Disagreements on a report-only identity; never fatal.
    pub report_only_mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub sequence: String,
    pub status: Status,
    pub params: Vec<(String, String)>,
    pub records: Vec<IndexRecord>,
    pub summary: Summary,
    pub passed: bool,
}

impl VerificationReport {
    /// Serializes without timing fields, for comparing runs.
    pub fn without_timing(&self) -> VerificationReport {
        let mut r = self.clone();
        for rec in &mut r.records {
            rec.elapsed_us = 0;
        }
        r
    }
}

fn point_param(params: &[(String, String)]) -> Result<Option<Rational>> {
    let mut x = None;
    for (k, v) in params {
        match k.as_str() {
            "x" => x = Some(v.parse::<Rational>()?),
            other => return Err(Error::InvalidParameters(format!("unknown parameter `{other}`"))),
        }
    }
    Ok(x)
}

fn check_index(id: &ClosedFormIdentity, n: usize, x: Option<&Rational>) -> Result<IndexRecord> {
    let start = Instant::now();
    let spec = match x {
        Some(v) => id.sequence.at(v),
        None => id.sequence.clone(),
    };
    let oracle = hankel_det(&spec, n)?.value;
    let mut closed = id.eval(n)?;
    if let Some(v) = x {
        closed = Term::Scalar(closed.eval_at(v));
    }
    let claim = id.vanishing.claim(n as u64);
    let is_zero = oracle.as_scalar().is_some_and(|c| c.is_zero());
    let claim_holds = claim.is_none_or(|z| z == is_zero);
    Ok(IndexRecord {
        index: n,
        oracle: oracle.to_string(),
        closed_form: closed.to_string(),
        matches: oracle == closed,
        claim,
        claim_holds,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

fn report(id: &ClosedFormIdentity, max_index: usize, params: &[(String, String)]) -> Result<VerificationReport> {
    let x = point_param(params)?;
    let records = (0..=max_index).map(|n| check_index(id, n, x.as_ref())).collect::<Result<Vec<_>>>()?;
    let passed_count = records.iter().filter(|r| r.ok()).count();
    let bad = records.len() - passed_count;
    let (failed, report_only_mismatches) = match id.status {
        Status::Asserted => (bad, 0),
        Status::ReportOnly => (0, bad),
    };
    Ok(VerificationReport {
        id: id.id.clone(),
        sequence: id.sequence.name.clone(),
        status: id.status,
        params: params.to_vec(),
        summary: Summary {
            min_index: 0,
            max_index,
            checked: records.len(),
            passed: passed_count,
            failed,
            report_only_mismatches,
        },
        passed: failed == 0,
        records,
    })
}

/// Checks identity `id` for indices `0..=max_index` (its default range if
/// `None`). The only accepted parameter is `x=<rational>`, which evaluates
/// both sides of a polynomial identity at that point.
pub fn verify_identity(id: &str, max_index: Option<usize>, params: &[(String, String)]) -> Result<VerificationReport> {
    let ident = identity(id)?;
    report(&ident, max_index.unwrap_or(ident.default_max), params)
}

/// Checks the whole registry in parallel. `default_max` replaces every
/// identity's own range; `overrides` take precedence per id.
pub fn verify_all(default_max: Option<usize>, overrides: &BTreeMap<String, usize>) -> Result<Vec<VerificationReport>> {
    registry()
        .par_iter()
        .map(|ident| {
            let max = overrides.get(&ident.id).copied().or(default_max).unwrap_or(ident.default_max);
            report(ident, max, &[])
        })
        .collect()
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

pub fn to_json(reports: &[VerificationReport]) -> Result<String> {
    serde_json::to_string_pretty(reports).map_err(|e| Error::Parse(e.to_string()))
}

pub fn from_json(s: &str) -> Result<Vec<VerificationReport>> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    status: &'a str,
    index: usize,
    oracle: &'a str,
    closed_form: &'a str,
    #[serde(rename = "match")]
    matches: bool,
    claim: &'a str,
    claim_holds: bool,
    elapsed_us: u64,
}

/// One row per index record.
pub fn to_csv(reports: &[VerificationReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        let status = match r.status {
            Status::Asserted => "asserted",
            Status::ReportOnly => "report-only",
        };
        for rec in &r.records {
            let claim = match rec.claim {
                Some(true) => "zero",
                Some(false) => "nonzero",
                None => "",
            };
            w.serialize(CsvRow {
                id: &r.id,
                status,
                index: rec.index,
                oracle: &rec.oracle,
                closed_form: &rec.closed_form,
                matches: rec.matches,
                claim,
                claim_holds: rec.claim_holds,
                elapsed_us: rec.elapsed_us,
            })
            .map_err(|e| Error::Parse(e.to_string()))?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// One line per identity: `PASS`/`FAIL`/`INFO`, id, range, counts.
pub fn to_plain(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let tag = match (r.status, r.passed) {
            (Status::ReportOnly, _) => "INFO",
            (_, true) => "PASS",
            (_, false) => "FAIL",
        };
        out.push_str(&format!(
            "{tag} {} n=0..{} {}/{}",
            r.id, r.summary.max_index, r.summary.passed, r.summary.checked
        ));
        if r.status == Status::ReportOnly {
            let agree: Vec<String> =
                r.records.iter().map(|rec| format!("{}:{}", rec.index, if rec.ok() { "agree" } else { "differ" })).collect();
            out.push_str(&format!(" [{}]", agree.join(" ")));
        }
        out.push('\n');
        for rec in r.records.iter().filter(|rec| !rec.ok()) {
            out.push_str(&format!(
                "    n={} oracle={} closed_form={} claim_holds={}\n",
                rec.index, rec.oracle, rec.closed_form, rec.claim_holds
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_numbers_pass() {
        let r = verify_identity("Hn_Ek", Some(8), &[]).unwrap();
        assert!(r.passed);
        assert_eq!(r.records.len(), 9);
        assert_eq!(r.records[2].oracle, "-4");
    }

    #[test]
    fn power_sum_onset() {
        let r = verify_identity("H_Sk(s=2)", Some(9), &[]).unwrap();
        assert!(r.passed, "{}", to_plain(std::slice::from_ref(&r)));
        for rec in &r.records {
            let m = rec.index / 2;
            let zero = rec.index % 2 == 0 || m >= 2;
            assert_eq!(rec.oracle == "0", zero, "n={}", rec.index);
        }
    }

    #[test]
    fn point_evaluation() {
        let p = vec![("x".to_string(), "1/3".to_string())];
        assert!(verify_identity("Hn_B2k+1_poly", Some(3), &p).unwrap().passed);
        let bad = vec![("y".to_string(), "1".to_string())];
        assert!(verify_identity("Hn_B2k+1_poly", Some(1), &bad).is_err());
        assert!(matches!(verify_identity("missing", None, &[]), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn serialization_round_trips() {
        let reports = vec![verify_identity("all:E_k", Some(3), &[]).unwrap()];
        assert_eq!(from_json(&to_json(&reports).unwrap()).unwrap(), reports);
        let csv = to_csv(&reports).unwrap();
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.starts_with("id,status,index,oracle,closed_form,match"));
    }
}
