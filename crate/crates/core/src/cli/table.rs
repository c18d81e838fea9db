use serde::Serialize;

use crate::closed_forms::{registry, ClosedFormIdentity, Group, Status};
use crate::error::{Error, Result};
use crate::hankel::hankel_det;

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub id: String,
    pub sequence: String,
    pub eps: String,
    pub a: String,
    pub b: String,
    pub citation: String,
    pub report_only: bool,
    /// `(n, H_n)` from the brute-force determinant.
    pub checks: Vec<(usize, String)>,
    /// Whether every spot check equals the closed form.
    pub agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub which: String,
    pub indices: Vec<usize>,
    pub rows: Vec<TableRow>,
}

fn row(id: &ClosedFormIdentity, indices: &[usize]) -> Result<TableRow> {
    let cells = id.cells.clone().ok_or_else(|| Error::InvalidParameters(format!("`{}` has no table cells", id.id)))?;
    let mut checks = Vec::new();
    let mut agrees = true;
    for &n in indices {
        let h = hankel_det(&id.sequence, n)?.value;
        agrees &= h == id.eval(n)?;
        checks.push((n, h.to_string()));
    }
    Ok(TableRow {
        id: id.id.clone(),
        sequence: id.sequence.name.clone(),
        eps: cells.eps,
        a: cells.a,
        b: cells.b,
        citation: id.citation.clone(),
        report_only: id.status == Status::ReportOnly,
        checks,
        agrees,
    })
}

/// `"7.1"`: the all-`n` table with `H_0..H_3`; `"7.2"`: the odd-only table
/// with `H_1, H_3, H_5`.
pub fn build(which: &str) -> Result<Table> {
    let (group, indices) = match which {
        "7.1" => (Group::TableAllN, vec![0, 1, 2, 3]),
        "7.2" => (Group::TableOddOnly, vec![1, 3, 5]),
        other => return Err(Error::InvalidParameters(format!("unknown table `{other}`"))),
    };
    let rows = registry()
        .iter()
        .filter(|i| i.group == group)
        .map(|i| row(i, &indices))
        .collect::<Result<Vec<_>>>()?;
    Ok(Table { which: which.to_string(), indices, rows })
}

impl Table {
    fn headers(&self) -> Vec<String> {
        let mut h: Vec<String> = ["sequence", "eps(n)", "a", "b(l)", "citation"].map(String::from).to_vec();
        h.extend(self.indices.iter().map(|n| format!("H_{n}")));
        h.push("check".into());
        h
    }

    fn cells(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                let mut c = vec![r.sequence.clone(), r.eps.clone(), r.a.clone(), r.b.clone(), r.citation.clone()];
                c.extend(r.checks.iter().map(|(_, v)| v.clone()));
                c.push(match (r.agrees, r.report_only) {
                    (true, _) => "ok".into(),
                    (false, true) => "differs (report only)".into(),
                    (false, false) => "MISMATCH".into(),
                });
                c
            })
            .collect()
    }

    pub fn to_plain(&self) -> String {
        let headers = self.headers();
        let cells = self.cells();
        let widths: Vec<usize> = (0..headers.len())
            .map(|j| cells.iter().map(|r| r[j].chars().count()).chain([headers[j].len()]).max().unwrap_or(0))
            .collect();
        let line = |r: &[String]| {
            r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join(" | ").trim_end().to_string()
        };
        let mut out = vec![line(&headers)];
        out.push(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("-+-"));
        out.extend(cells.iter().map(|r| line(r)));
        out.join("\n")
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(self.headers()).map_err(err)?;
        for r in self.cells() {
            w.write_record(r).map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))?.trim_end().to_string())
    }

    pub fn to_latex(&self) -> String {
        let headers = self.headers();
        let mut out = format!("\\begin{{tabular}}{{|{}|}}\n\\hline\n", "l".repeat(headers.len()));
        let esc = |s: &str| s.replace('_', "\\_").replace('^', "\\^{}").replace('&', "\\&");
        out.push_str(&headers.iter().map(|h| esc(h)).collect::<Vec<_>>().join(" & "));
        out.push_str(" \\\\\n\\hline\n");
        for r in self.cells() {
            let last = r.len() - 1;
            let cells: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(j, c)| if j == 4 || j == last { esc(c) } else { format!("${c}$") })
                .collect();
            out.push_str(&cells.join(" & "));
            out.push_str(" \\\\\n");
        }
        out.push_str("\\hline\n\\end{tabular}");
        out
    }
}
